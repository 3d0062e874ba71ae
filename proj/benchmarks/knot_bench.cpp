#include <benchmark/benchmark.h>

#include "knot/catalog.hpp"
#include "knot/enumerate.hpp"
#include "knot/flype.hpp"
#include "knot/interlace.hpp"

using namespace knot;

#ifndef CATALOG_PATH
#define CATALOG_PATH "data/catalog.txt"
#endif

namespace {

const std::vector<CatalogEntry>& catalog() {
    static auto cat = load_catalog(CATALOG_PATH);
    return cat;
}

void BM_realizability(benchmark::State& state) {
    auto words = all_words(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& w : words) benchmark::DoNotOptimize(check_realizability(w).realizable());
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(words.size()));
}
BENCHMARK(BM_realizability)->Arg(4)->Arg(5)->Arg(6);

void BM_embedding_search(benchmark::State& state) {
    auto words = all_words(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& w : words) benchmark::DoNotOptimize(build_embedding(w).has_value());
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(words.size()));
}
BENCHMARK(BM_embedding_search)->Arg(4)->Arg(5)->Arg(6);

void BM_orbit(benchmark::State& state) {
    static const char* names[] = {"7_7", "8_12", "8_14"};
    SignedDiagram sd = make_signed(find_entry(catalog(), names[state.range(0)])->code);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbit(sd).keys.size());
}
BENCHMARK(BM_orbit)->Arg(0)->Arg(1)->Arg(2);

void BM_cwcd(benchmark::State& state) {
    SignedDiagram sd = make_signed(find_entry(catalog(), "8_12")->code);
    for (auto _ : state) benchmark::DoNotOptimize(cwcd_canonical(build_cwcd(sd)));
}
BENCHMARK(BM_cwcd);

} // namespace

BENCHMARK_MAIN();
