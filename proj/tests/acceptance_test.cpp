// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the exit status is the number of failed criteria.

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "knot/catalog.hpp"
#include "knot/condense.hpp"
#include "knot/enumerate.hpp"
#include "knot/interlace.hpp"
#include "knot/invariants.hpp"

using namespace knot;

#ifndef CATALOG_PATH
#define CATALOG_PATH "data/catalog.txt"
#endif

namespace {

int failures = 0;

void report(int crit, bool ok, const std::string& detail) {
    printf("criterion %d: %s (%s)\n", crit, ok ? "PASS" : "FAIL", detail.c_str());
    fflush(stdout);
    if (!ok) failures++;
}

std::vector<CatalogEntry> the_catalog() {
    return load_catalog(CATALOG_PATH);
}

// 1. The three-condition interlacement test agrees with the exhaustive
//    rotation-system embedding search on every word class with <= 6 chords.
void criterion1() {
    long long checked = 0, disagree = 0;
    for (int n = 1; n <= 6; n++)
        for (const auto& code : all_words(n)) {
            bool fast = check_realizability(code).realizable();
            bool slow = build_embedding(code).has_value();
            checked++;
            if (fast != slow) disagree++;
        }
    report(1, disagree == 0,
           "interlacement test vs embedding search on " + std::to_string(checked) +
               " word classes, " + std::to_string(disagree) + " disagreements");
}

// 2. The 14-letter word of 7_7: realizable, 12 interlacement edges with
//    degree sequence (4,4,4,4,4,2,2), condensed graph 5 vertices with
//    weights {-1,-1,0,0,0}.
void criterion2() {
    GaussCode w = GaussCode::parse("1 2 3 4 5 6 4 7 2 1 7 3 6 5");
    bool ok = check_realizability(w).realizable();
    Graph lg = build_interlacement(w);
    ok = ok && lg.edge_count() == 12;
    std::multiset<int> degs;
    for (int v = 0; v < lg.size(); v++) degs.insert(lg.degree(v));
    ok = ok && degs == std::multiset<int>{2, 2, 4, 4, 4, 4, 4};
    CondensedGraph ng = neighborhood_graph(lg);
    std::multiset<int> ws(ng.g.weight.begin(), ng.g.weight.end());
    ok = ok && ng.g.size() == 5 && ws == std::multiset<int>{-1, -1, 0, 0, 0};
    report(2, ok, "7_7 word: realizable, 12 edges, degrees (4,4,4,4,4,2,2), condensed 5 vertices {-1,-1,0,0,0}");
}

// 3. Across the full flype orbit of every catalog knot with <= 8 crossings:
//    per-label sign vector, canonical interlacement graph, writhe and
//    canonical weighted chord diagram are all constant.
void criterion3() {
    int knots = 0, bad = 0;
    for (const auto& e : the_catalog()) {
        if (e.code.crossings() > 8) continue;
        knots++;
        SignedDiagram sd = make_signed(e.code);
        std::string lg0 = canonical_key(build_enhanced_lg(sd, true, false));
        std::string cw0 = cwcd_canonical(build_cwcd(sd));
        int w0 = 0;
        for (int x : sd.eps) w0 += x;
        for (const auto& mem : enumerate_orbit(sd).members) {
            int w1 = 0;
            for (int x : mem.eps) w1 += x;
            if (mem.eps != sd.eps || w1 != w0 ||
                canonical_key(build_enhanced_lg(mem, true, false)) != lg0 ||
                cwcd_canonical(build_cwcd(mem)) != cw0) {
                bad++;
                break;
            }
        }
    }
    report(3, bad == 0,
           "flype-orbit invariance of signs/LG/writhe/cwCD over " + std::to_string(knots) +
               " catalog knots, " + std::to_string(bad) + " violations");
}

// 4. Canonical weighted chord diagrams are pairwise distinct across the
//    catalog knots <= 8 crossings, and each chiral knot differs from its
//    mirror.
void criterion4() {
    std::set<std::string> seen;
    int knots = 0;
    bool distinct = true, mirror_ok = true;
    for (const auto& e : the_catalog()) {
        if (e.code.crossings() > 8) continue;
        knots++;
        SignedDiagram sd = make_signed(e.code);
        std::string canon = cwcd_canonical(build_cwcd(sd));
        if (!seen.insert(canon).second) distinct = false;
        if (!chirality_profile(sd).achiral() &&
            canon == cwcd_canonical(build_cwcd(mirror_diagram(sd))))
            mirror_ok = false;
    }
    report(4, distinct && mirror_ok,
           "canonical cwCDs pairwise distinct over " + std::to_string(knots) +
               " knots and chiral knots differ from mirrors");
}

// 5. Chirality reproductions: 8_12 achiral, 10_71 chiral, 8_17 achiral by
//    reflection but not invertible, 7_7 chiral.
void criterion5() {
    auto cat = the_catalog();
    auto prof = [&](const char* name) {
        return chirality_profile(make_signed(find_entry(cat, name)->code));
    };
    ChiralityProfile p812 = prof("8_12"), p1071 = prof("10_71"), p817 = prof("8_17"), p77 = prof("7_7");
    bool ok = p812.achiral() && !p1071.achiral() && p817.verdict() == "achiral-" &&
              !p817.invertible && p77.verdict() == "chiral";
    report(5, ok, "8_12 achiral, 10_71 chiral, 8_17 achiral- and non-invertible, 7_7 chiral");
}

// 6. The constructed four-mutant family: four distinct diagrams, equal
//    canonical interlacement graphs, sign decoration splits {Id,pi} from
//    {H,V}, sign+arrow decoration separates all four.
void criterion6() {
    SignedDiagram sd = make_signed(GaussCode::parse(
        "O1+ U2+ O3- U4- O5+ U1+ O2+ U6+ O4- U7- O8- U9- O10- U11- O12- U3- "
        "O6+ U5+ O11- U10- O9- U8- O7- U12-"));
    std::vector<char> inside(12, 0);
    for (int v = 0; v < 6; v++) inside[v] = 1;
    std::set<std::string> keys, plain, eps_keys, alpha_keys;
    std::map<std::string, std::set<std::string>> eps_groups;
    for (auto sym : {TangleSym::Id, TangleSym::H, TangleSym::V, TangleSym::Pi}) {
        SignedDiagram m = mutate(sd, inside, sym);
        keys.insert(diagram_key(m));
        plain.insert(canonical_key(build_enhanced_lg(m, false, false)));
        std::string ek = canonical_key(build_enhanced_lg(m, true, false));
        eps_keys.insert(ek);
        eps_groups[ek].insert(tangle_sym_name(sym));
        alpha_keys.insert(canonical_key(build_enhanced_lg(m, true, true)));
    }
    bool split_ok = eps_keys.size() == 2;
    for (const auto& [k, group] : eps_groups)
        split_ok = split_ok && (group == std::set<std::string>{"Id", "pi"} ||
                                group == std::set<std::string>{"H", "V"});
    bool ok = keys.size() == 4 && plain.size() == 1 && split_ok && alpha_keys.size() == 4;
    report(6, ok, "four mutants: distinct diagrams, equal LG, eps splits {Id,pi}|{H,V}, eps+arrows split all");
}

// 7. Neighborhood-graph properties: merge-order confluence (canonical form
//    survives vertex relabeling), complement duality, and the 2-tangle
//    correspondence; all graphs with <= 5 vertices plus 10^4 random graphs
//    with <= 8 vertices.
void criterion7() {
    std::mt19937 rng(20260823);
    long long checked = 0, bad = 0;

    auto test_graph = [&](const Graph& g) {
        checked++;
        // confluence: condensation commutes with relabeling
        int n = g.size();
        std::vector<int> perm(n);
        for (int i = 0; i < n; i++) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = Graph::make(n);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) h.adj[perm[i]][perm[j]] = g.adj[i][j];
        bool ok = canonical_key(neighborhood_graph(g).g) == canonical_key(neighborhood_graph(h).g);
        // duality: condensing the complement = complementing the condensation
        ok = ok && canonical_key(neighborhood_graph(g.complemented()).g) ==
                       canonical_key(neighborhood_graph(g).g.complemented());
        // 2-tangles of the condensation = condensed images of 2-tangles
        ok = ok && tangle_correspondence_check(g);
        if (!ok) bad++;
    };

    for (int n = 1; n <= 5; n++) {
        int m = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << m); mask++) {
            Graph g = Graph::make(n);
            int bit = 0;
            for (int i = 0; i < n; i++)
                for (int j = i + 1; j < n; j++)
                    if ((mask >> bit++) & 1) g.add_edge(i, j);
            test_graph(g);
        }
    }
    for (int t = 0; t < 10000; t++) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = Graph::make(n);
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
                if (rng() & 1) g.add_edge(i, j);
        test_graph(g);
    }
    report(7, bad == 0,
           "confluence + complement duality + tangle correspondence on " +
               std::to_string(checked) + " graphs, " + std::to_string(bad) + " violations");
}

// 8. count_realizations: 1 for every prime catalog shadow, 4 for the
//    three-summand composite word.
void criterion8() {
    bool ok = true;
    int knots = 0;
    for (const auto& e : the_catalog()) {
        GaussCode shadow(e.code.letters(), std::nullopt, std::nullopt);
        knots++;
        if (count_realizations(shadow) != 1) ok = false;
    }
    GaussCode comp = GaussCode::parse("1 2 3 1 2 3 4 5 6 4 5 6 7 8 9 7 8 9");
    ok = ok && count_realizations(comp) == 4;
    report(8, ok, "1 realization for " + std::to_string(knots) +
                      " prime shadows, 4 for the 3-summand composite");
}

// 9. Every generated tangle permutation of a series bundle preserves the
//    canonical interlacement graph. The converse (equal graphs imply
//    extended-mutation equivalence) is reported, not asserted.
void criterion9() {
    std::vector<std::vector<std::vector<int>>> sums{
        {{3}, {3}, {2}}, {{3}, {2, 1}, {2}}, {{2, 1}, {2, 1}, {2}}};
    std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1},
                                        {1, 2, 0}, {2, 0, 1}};
    int checked = 0, bad = 0;
    for (const auto& bundle : sums) {
        TangleSumShadow s = sum_shadow_with_cuts(bundle);
        SignedDiagram sd = make_signed(s.shadow);
        std::string want = canonical_key(build_enhanced_lg(sd, false, false));
        for (const auto& p : perms) {
            checked++;
            try {
                SignedDiagram out = permute_tangles(sd, s.cuts, p);
                if (canonical_key(build_enhanced_lg(out, false, false)) != want) bad++;
            } catch (const Error&) {
                bad++;
            }
        }
    }
    report(9, bad == 0, "tangle permutations preserve canonical LG in " +
                            std::to_string(checked - bad) + "/" + std::to_string(checked) +
                            " cases over 3 bundles");

    // Converse survey (informational): do distinct knot classes up to 7
    // crossings ever share a canonical interlacement graph?
    int collisions = 0, classes = 0;
    for (int n = 3; n <= 7; n++) {
        std::map<std::string, int> byLG;
        for (const auto& kc : knot_classes(n)) {
            classes++;
            byLG[canonical_key(build_enhanced_lg(kc.rep, false, false))]++;
        }
        for (const auto& [k, c] : byLG)
            if (c > 1) collisions += c - 1;
    }
    printf("note: converse survey over %d knot classes up to 7 crossings: "
           "%d canonical-LG collisions between distinct classes (reported, not asserted)\n",
           classes, collisions);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    printf("%s\n", failures == 0 ? "all acceptance criteria passed" : "ACCEPTANCE FAILURES PRESENT");
    return failures;
}
