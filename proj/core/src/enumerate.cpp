#include "knot/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "knot/flype.hpp"
#include "knot/interlace.hpp"

namespace knot {

namespace {

// Lexicographically least first-occurrence relabeling over all rotations
// and both directions; plain letters only, early-exit comparison.
std::vector<int> canonical_letters(const std::vector<int>& w) {
    int m = static_cast<int>(w.size());
    int n = m / 2;
    std::vector<int> best(m, n + 1);
    std::vector<int> relabel(n);
    bool have = false;
    for (int dir = 0; dir < 2; dir++)
        for (int start = 0; start < m; start++) {
            std::fill(relabel.begin(), relabel.end(), -1);
            int next = 0;
            bool worse = false, better = false;
            std::vector<int> cand(m);
            for (int k = 0; k < m && !worse; k++) {
                int pos = dir ? ((start - k) % m + m) % m : (start + k) % m;
                int lab = w[pos];
                if (relabel[lab] < 0) relabel[lab] = next++;
                cand[k] = relabel[lab];
                if (have && !better) {
                    if (cand[k] > best[k]) worse = true;
                    if (cand[k] < best[k]) better = true;
                }
            }
            if (!worse && (!have || better || cand < best)) {
                best = cand;
                have = true;
            }
        }
    return best;
}

void gen_matchings(std::vector<int>& mate, int m, const std::function<void(const std::vector<int>&)>& cb) {
    int i = 0;
    while (i < m && mate[i] >= 0) i++;
    if (i == m) {
        cb(mate);
        return;
    }
    for (int j = i + 1; j < m; j++) {
        if (mate[j] >= 0) continue;
        mate[i] = j;
        mate[j] = i;
        gen_matchings(mate, m, cb);
        mate[i] = mate[j] = -1;
    }
}

} // namespace

std::vector<GaussCode> all_words(int n) {
    int m = 2 * n;
    std::set<std::vector<int>> classes;
    std::vector<int> mate(m, -1);
    std::vector<int> word(m);
    gen_matchings(mate, m, [&](const std::vector<int>& mm) {
        int next = 0;
        std::vector<int> lab(m, -1);
        for (int i = 0; i < m; i++) {
            if (lab[i] < 0) lab[i] = lab[mm[i]] = next++;
            word[i] = lab[i];
        }
        classes.insert(canonical_letters(word));
    });
    std::vector<GaussCode> out;
    out.reserve(classes.size());
    for (const auto& w : classes) out.emplace_back(w, std::nullopt, std::nullopt);
    return out;
}

std::vector<GaussCode> prime_shadows(int n) {
    std::vector<GaussCode> out;
    for (auto& code : all_words(n)) {
        if (!code.reduced()) continue;
        if (!check_realizability(code).realizable()) continue;
        if (component_count(build_interlacement(code)) != 1) continue;
        out.push_back(std::move(code));
    }
    return out;
}

std::vector<KnotClass> knot_classes(int n) {
    std::vector<KnotClass> out;
    std::set<std::string> seen;
    for (const auto& code : prime_shadows(n)) {
        SignedDiagram sd = make_signed(code);
        if (seen.count(diagram_key(sd))) continue;
        FlypeOrbit orbit = enumerate_orbit(sd);
        FlypeOrbit mirror_orbit = enumerate_orbit(mirror_diagram(sd));
        KnotClass kc;
        kc.rep = sd;
        kc.orbit_keys = orbit.keys;
        kc.mirror_orbit_keys = mirror_orbit.keys;
        std::sort(kc.orbit_keys.begin(), kc.orbit_keys.end());
        std::sort(kc.mirror_orbit_keys.begin(), kc.mirror_orbit_keys.end());
        seen.insert(kc.orbit_keys.begin(), kc.orbit_keys.end());
        seen.insert(kc.mirror_orbit_keys.begin(), kc.mirror_orbit_keys.end());
        out.push_back(std::move(kc));
    }
    return out;
}

namespace {

struct Build {
    std::vector<std::array<EndRef, 4>> att;
    EndRef nw, ne, se, sw;

    int add() {
        att.push_back({EndRef{-1, -1}, EndRef{-1, -1}, EndRef{-1, -1}, EndRef{-1, -1}});
        return static_cast<int>(att.size()) - 1;
    }
    void join(EndRef a, EndRef b) {
        att[a.v][a.s] = b;
        att[b.v][b.s] = a;
    }
};

// Crossing slots counterclockwise: 0=NW, 1=SW, 2=SE, 3=NE; the transversal
// strands are NW-SE and SW-NE as required by the slot-pair convention.
Build single_crossing() {
    Build b;
    int v = b.add();
    b.nw = {v, 0};
    b.sw = {v, 1};
    b.se = {v, 2};
    b.ne = {v, 3};
    return b;
}

void htwist(Build& b) {  // new crossing to the east
    int v = b.add();
    b.join(b.ne, {v, 0});
    b.join(b.se, {v, 1});
    b.ne = {v, 3};
    b.se = {v, 2};
}

void vtwist(Build& b) {  // new crossing to the south
    int v = b.add();
    b.join(b.sw, {v, 0});
    b.join(b.se, {v, 3});
    b.sw = {v, 1};
    b.se = {v, 2};
}

// Twist runs alternate horizontal/vertical; the last run's direction is
// forced (horizontal for a knot-style tangle, vertical for a sum component),
// which fixes the direction of every earlier run.
Build rational_build(const std::vector<int>& digits, bool last_horizontal) {
    if (digits.empty())
        throw Error(ErrorKind::SyntaxError, "rational digits must be positive");
    size_t k = digits.size();
    auto horizontal = [&](size_t i) { return ((k - 1 - i) % 2 == 0) == last_horizontal; };
    Build b = single_crossing();
    for (size_t i = 0; i < k; i++) {
        if (digits[i] < 1)
            throw Error(ErrorKind::SyntaxError, "rational digits must be positive");
        for (int t = (i == 0 ? 1 : 0); t < digits[i]; t++) (horizontal(i) ? htwist(b) : vtwist(b));
    }
    return b;
}

GaussCode numerator_closure(Build b) {
    b.join(b.nw, b.ne);
    b.join(b.sw, b.se);
    Diagram d(std::move(b.att), {});
    auto word = d.word();
    if (word.empty())
        throw Error(ErrorKind::SplitsIntoLink, "closure has more than one component");
    return GaussCode(word, std::nullopt, std::nullopt);
}

} // namespace

GaussCode rational_shadow(const std::vector<int>& digits) {
    return numerator_closure(rational_build(digits, true));
}

TangleSumShadow sum_shadow_with_cuts(const std::vector<std::vector<int>>& tangles) {
    if (tangles.empty())
        throw Error(ErrorKind::SyntaxError, "empty tangle sum");
    std::vector<int> summand;  // per construction vertex
    Build acc = rational_build(tangles[0], false);
    summand.assign(acc.att.size(), 0);
    for (size_t t = 1; t < tangles.size(); t++) {
        Build b = rational_build(tangles[t], false);
        int off = static_cast<int>(acc.att.size());
        auto shift = [&](EndRef e) { return EndRef{e.v + off, e.s}; };
        for (auto& row : b.att) {
            std::array<EndRef, 4> r;
            for (int s = 0; s < 4; s++)
                r[s] = row[s].v < 0 ? row[s] : shift(row[s]);
            acc.att.push_back(r);
            summand.push_back(static_cast<int>(t));
        }
        acc.join(acc.ne, shift(b.nw));
        acc.join(acc.se, shift(b.sw));
        acc.ne = shift(b.ne);
        acc.se = shift(b.se);
    }
    acc.join(acc.nw, acc.ne);
    acc.join(acc.sw, acc.se);
    Diagram d(std::move(acc.att), {});
    auto word = d.word();
    if (word.empty())
        throw Error(ErrorKind::SplitsIntoLink, "closure has more than one component");
    int n = static_cast<int>(word.size()) / 2;
    TangleSumShadow out;
    out.shadow = GaussCode(word, std::nullopt, std::nullopt);
    out.cuts.assign(tangles.size(), std::vector<char>(n, 0));
    for (int v = 0; v < n; v++) out.cuts[summand[v]][v] = 1;
    return out;
}

GaussCode sum_shadow(const std::vector<std::vector<int>>& tangles) {
    return sum_shadow_with_cuts(tangles).shadow;
}

} // namespace knot
