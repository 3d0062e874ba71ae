#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "knot/catalog.hpp"
#include "knot/flype.hpp"

using namespace knot;

#ifndef CATALOG_PATH
#define CATALOG_PATH "data/catalog.txt"
#endif

namespace {

SignedDiagram from_catalog(const char* name) {
    static auto cat = load_catalog(CATALOG_PATH);
    return make_signed(find_entry(cat, name)->code);
}

using CycleKey = std::tuple<int, int, int, std::vector<int>>;

std::set<CycleKey> cycle_set(const SignedDiagram& sd) {
    std::set<CycleKey> out;
    for (const auto& c : find_flype_cycles(sd)) out.insert({c.p, c.q, c.sign, c.members});
    return out;
}

} // namespace

TEST_CASE("require_knot rejects bad diagrams") {
    CHECK_THROWS_AS(require_knot(make_signed(GaussCode::parse("1 1"))), Error);
    CHECK_THROWS_AS(require_knot(make_signed(GaussCode::parse("O1 O2 O3 U1 U2 U3"))), Error);
    CHECK_NOTHROW(require_knot(make_signed(GaussCode::parse("O1 U2 O3 U1 O2 U3"))));
}

TEST_CASE("trefoil admits no effective flype") {
    SignedDiagram sd = make_signed(GaussCode::parse("O1 U2 O3 U1 O2 U3"));
    FlypeOrbit orbit = enumerate_orbit(sd);
    CHECK(orbit.keys.size() == 1);
    CHECK(orbit.moves.empty());
}

TEST_CASE("7_7 flype structure") {
    SignedDiagram sd = from_catalog("7_7");
    CHECK(find_flype_opportunities(sd).size() == 14);
    FlypeOrbit orbit = enumerate_orbit(sd);
    CHECK(orbit.keys.size() == 3);
    CHECK(orbit.moves.size() == 26);
    std::set<std::string> keys(orbit.keys.begin(), orbit.keys.end());
    CHECK(keys.size() == 3);  // all members distinct
}

TEST_CASE("orbit sizes of catalog knots") {
    CHECK(enumerate_orbit(from_catalog("4_1")).keys.size() == 1);
    CHECK(enumerate_orbit(from_catalog("6_3")).keys.size() == 2);
    CHECK(enumerate_orbit(from_catalog("7_6")).keys.size() == 3);
    CHECK(enumerate_orbit(from_catalog("8_8")).keys.size() == 4);
    CHECK(enumerate_orbit(from_catalog("8_12")).keys.size() == 5);
    CHECK(enumerate_orbit(from_catalog("8_14")).keys.size() == 6);
}

TEST_CASE("apply_flype preserves writhe and the knot") {
    SignedDiagram sd = from_catalog("7_7");
    auto ops = find_flype_opportunities(sd);
    REQUIRE_FALSE(ops.empty());
    int w0 = 0;
    for (int e : sd.eps) w0 += e;
    FlypeOrbit orbit = enumerate_orbit(sd);
    std::set<std::string> keys(orbit.keys.begin(), orbit.keys.end());
    for (const auto& of : ops) {
        SignedDiagram out = apply_flype(sd, of);
        CHECK(out.eps == sd.eps);  // per-label signs carried unchanged
        int w1 = 0;
        for (int e : out.eps) w1 += e;
        CHECK(w1 == w0);
        CHECK(keys.count(diagram_key(out)) == 1);
    }
}

TEST_CASE("flype cycles of torus and twist knots") {
    SignedDiagram tref = make_signed(GaussCode::parse("O1 U2 O3 U1 O2 U3"));
    CHECK(cycle_set(tref) == std::set<CycleKey>{{3, 3, 1, {0, 1, 2}}});

    auto c63 = cycle_set(from_catalog("6_3"));
    std::set<std::tuple<int, int, int>> shapes;
    for (const auto& [p, q, s, m] : c63) shapes.insert({p, q, s});
    CHECK(shapes == std::set<std::tuple<int, int, int>>{{1, 2, -1}, {1, 2, 1}, {2, 2, -1}, {2, 2, 1}});
}

TEST_CASE("flype cycles of 8_12 are four travelling pairs") {
    auto cyc = cycle_set(from_catalog("8_12"));
    CHECK(cyc == std::set<CycleKey>{{2, 2, 1, {6, 7}},
                                    {2, 2, -1, {2, 3}},
                                    {2, 2, -1, {0, 1}},
                                    {2, 2, 1, {4, 5}}});
}

TEST_CASE("weighted chord diagram of the trefoil") {
    WeightedChordDiagram w = build_cwcd(make_signed(GaussCode::parse("O1 U2 O3 U1 O2 U3")));
    CHECK(w.slots == 6);
    CHECK(w.gap_chords.empty());
    for (int s = 0; s < 6; s++) {
        CHECK(w.skel_num[s] == 1);
        CHECK(w.skel_den[s] == 1);
        CHECK(w.skel_partner[w.skel_partner[s]] == s);
    }
    CHECK(cwcd_canonical(w) == "L6;3/1:1;3/1:1;3/1:1;3/1:1;3/1:1;3/1:1;|");
}

TEST_CASE("canonical weighted chord diagrams of small knots") {
    CHECK(cwcd_canonical(build_cwcd(from_catalog("4_1"))) ==
          "L8;3/-1:1;5/1:1;3/1:1;5/-1:1;3/-1:1;5/1:1;3/1:1;5/-1:1;|");
    CHECK(cwcd_canonical(build_cwcd(from_catalog("6_3"))) ==
          "L8;4/-1:1;4/-1:1;4/1:1;4/1:1;4/-1:1;4/-1:1;4/1:1;4/1:1;|"
          "0,2,-1/2;0,6,1/2;2,4,1/2;4,6,-1/2;");
    CHECK(cwcd_canonical(build_cwcd(from_catalog("7_7"))) ==
          "L8;3/1:1;5/1:1;3/1:1;5/1:1;3/1:1;5/1:1;3/1:1;5/1:1;|"
          "1,3,-1/2;1,5,-1/2;1,7,-1/2;3,5,-1/2;3,7,-1/2;5,7,-1/2;");
    CHECK(cwcd_canonical(build_cwcd(from_catalog("8_12"))) ==
          "L8;3/-1:1;5/1:1;3/1:1;5/-1:1;3/-1:1;5/1:1;3/1:1;5/-1:1;|"
          "1,3,-1/1;1,7,1/1;3,5,1/1;5,7,-1/1;");
}

TEST_CASE("canonical cwCD is constant over a flype orbit") {
    for (const char* name : {"6_3", "7_6", "8_8", "8_12"}) {
        SignedDiagram sd = from_catalog(name);
        std::string want = cwcd_canonical(build_cwcd(sd));
        FlypeOrbit orbit = enumerate_orbit(sd);
        for (const auto& mem : orbit.members)
            CHECK(cwcd_canonical(build_cwcd(mem)) == want);
    }
}

TEST_CASE("cwCD transforms") {
    WeightedChordDiagram w = build_cwcd(from_catalog("6_2"));
    CHECK(cwcd_encode(transform_cwcd(w, 0, false)) == cwcd_encode(w));
    // rotating all the way round is the identity
    CHECK(cwcd_encode(transform_cwcd(w, w.slots, false)) == cwcd_encode(w));
    // canonical form is invariant under any dihedral image
    for (int k = 0; k < w.slots; k++) {
        CHECK(cwcd_canonical(transform_cwcd(w, k, false)) == cwcd_canonical(w));
        CHECK(cwcd_canonical(transform_cwcd(w, k, true)) == cwcd_canonical(w));
    }
    // flipping twice is the identity
    CHECK(cwcd_encode(flip_signs(flip_signs(w))) == cwcd_encode(w));
}

TEST_CASE("mirror diagram gives the sign-flipped cwCD") {
    for (const char* name : {"3_1", "6_2", "7_7", "8_12"}) {
        SignedDiagram sd = from_catalog(name);
        std::string mirror_canon = cwcd_canonical(build_cwcd(mirror_diagram(sd)));
        CHECK(mirror_canon == cwcd_canonical(flip_signs(build_cwcd(sd))));
    }
}
