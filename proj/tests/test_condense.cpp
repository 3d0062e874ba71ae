#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "knot/catalog.hpp"
#include "knot/condense.hpp"
#include "knot/interlace.hpp"

using namespace knot;

#ifndef CATALOG_PATH
#define CATALOG_PATH "data/catalog.txt"
#endif

namespace {

std::vector<int> sorted_weights(const Graph& g) {
    std::vector<int> w = g.weight;
    std::sort(w.begin(), w.end());
    return w;
}

} // namespace

TEST_CASE("condensed interlacement of the 7_7 word") {
    GaussCode w77 = GaussCode::parse("1 2 3 4 5 6 4 7 2 1 7 3 6 5");
    Graph lg = build_interlacement(w77);
    CHECK(lg.size() == 7);
    CHECK(lg.edge_count() == 12);
    std::vector<int> degs;
    for (int v = 0; v < lg.size(); v++) degs.push_back(lg.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{2, 2, 4, 4, 4, 4, 4});

    CondensedGraph ng = neighborhood_graph(lg);
    CHECK(ng.g.size() == 5);
    CHECK(sorted_weights(ng.g) == std::vector<int>{-1, -1, 0, 0, 0});
    // provenance partitions the original vertex set
    std::set<int> seen;
    for (const auto& p : ng.provenance) seen.insert(p.begin(), p.end());
    CHECK(seen.size() == 7);
}

TEST_CASE("neighborhood graph contracts cliques and anticliques") {
    Graph k3 = Graph::make(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    CondensedGraph c = neighborhood_graph(k3);
    CHECK(c.g.size() == 1);
    CHECK(c.g.weight[0] == 2);

    Graph e3 = Graph::make(3);  // no edges
    c = neighborhood_graph(e3);
    CHECK(c.g.size() == 1);
    CHECK(c.g.weight[0] == -2);
}

TEST_CASE("neighborhood graph leaves irreducible graphs alone") {
    Graph p4 = Graph::make(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CondensedGraph c = neighborhood_graph(p4);
    CHECK(c.g.size() == 4);
    CHECK(sorted_weights(c.g) == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("condense chord diagram torsads") {
    CondensedCD c = condense_chord_diagram(build_chord_diagram(GaussCode::parse("1 2 3 1 2 3")));
    REQUIRE(c.cd.size() == 1);
    CHECK(c.weight[0] == 2);
    CHECK(c.members[0] == std::vector<int>{0, 1, 2});

    c = condense_chord_diagram(build_chord_diagram(GaussCode::parse("1 2 2 1")));
    REQUIRE(c.cd.size() == 1);
    CHECK(c.weight[0] == -1);
    CHECK(c.members[0] == std::vector<int>{0, 1});
}

TEST_CASE("condense chord diagram of 7_7") {
    CondensedCD c = condense_chord_diagram(
        build_chord_diagram(GaussCode::parse("1 2 3 4 5 6 4 7 2 1 7 3 6 5")));
    CHECK(c.cd.size() == 5);
    std::vector<int> w = c.weight;
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<int>{-1, -1, 0, 0, 0});
}

TEST_CASE("find_2tangles on a path") {
    Graph p4 = Graph::make(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    auto ts = find_2tangles(p4);
    std::set<std::vector<int>> got(ts.begin(), ts.end());
    CHECK(got.size() == 10);
    CHECK(got.count({0}) == 1);
    CHECK(got.count({0, 1}) == 1);       // boundary is the single edge 1-2
    CHECK(got.count({0, 2}) == 0);       // 2-3 breaks complete bipartiteness
    CHECK(got.count({0, 3}) == 0);
    CHECK(got.count({1, 2}) == 0);
    CHECK(got.count({1, 3}) == 0);
}

TEST_CASE("connector classification") {
    SignedDiagram tref = make_signed(GaussCode::parse("O1 U2 O3 U1 O2 U3"));
    CHECK(classify_connector(tref.d, {1, 0, 0}) == Connector::X);
    Connector two = classify_connector(tref.d, {1, 1, 0});
    CHECK(two != Connector::X);  // a twist region transits along the boundary

    auto cat = load_catalog(CATALOG_PATH);
    SignedDiagram e82 = make_signed(find_entry(cat, "8_2")->code);
    std::vector<char> inside(8, 0);
    for (int v = 0; v < 6; v++) inside[v] = 1;
    CHECK(classify_connector(e82.d, inside) == Connector::V);

    SignedDiagram fig8 = make_signed(GaussCode::parse("O1 U2 O3 U4 O2 U1 O4 U3"));
    CHECK_THROWS_AS(classify_connector(fig8.d, {1, 0, 1, 0}), Error);
}

TEST_CASE("tangle correspondence on small graphs") {
    Graph p4 = Graph::make(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK(tangle_correspondence_check(p4));

    Graph lg = build_interlacement(GaussCode::parse("1 2 3 4 5 6 4 7 2 1 7 3 6 5"));
    CHECK(tangle_correspondence_check(lg));
}

TEST_CASE("complement duality of condensation") {
    Graph lg = build_interlacement(GaussCode::parse("1 2 3 4 5 6 4 7 2 1 7 3 6 5"));
    Graph a = neighborhood_graph(lg.complemented()).g;
    Graph b = neighborhood_graph(lg).g.complemented();
    CHECK(canonical_key(a) == canonical_key(b));
}
