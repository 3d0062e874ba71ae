#include "knot/flype.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "knot/condense.hpp"

namespace knot {

void require_knot(const SignedDiagram& sd) {
    if (!sd.d.reduced())
        throw Error(ErrorKind::NotReduced, "diagram has a nugatory crossing");
    auto circ = sd.d.circuit();
    int m = static_cast<int>(circ.size());
    auto over_at = [&](int i) { return sd.d.over_pair(circ[i].v) == circ[i].s % 2; };
    for (int i = 0; i < m; i++)
        if (over_at(i) == over_at((i + 1) % m))
            throw Error(ErrorKind::NotAlternating, "over/under flags do not alternate");
}

std::vector<FlypeOpportunity> find_flype_opportunities(const SignedDiagram& sd) {
    require_knot(sd);
    int n = sd.d.crossings();
    auto w = sd.d.word();
    int m = static_cast<int>(w.size());
    std::vector<FlypeOpportunity> out;
    for (unsigned long mask = 1; mask + 1 < (1ul << n); mask++) {
        std::vector<char> inside(n, 0);
        for (int v = 0; v < n; v++) inside[v] = (mask >> v) & 1;
        if (!tangle_boundary(sd.d, inside)) continue;
        std::array<int, 4> cut{};
        int k = 0;
        for (int i = 0; i < m && k <= 4; i++)
            if (inside[w[i]] != inside[w[(i + 1) % m]]) {
                if (k < 4) cut[k] = i;
                k++;
            }
        if (k != 4) continue;
        for (int c = 0; c < n; c++) {
            if (inside[c]) continue;
            std::array<int, 2> active{}, passive{};
            int na = 0, np = 0;
            for (int g : cut) {
                int outside_end = inside[w[g]] ? w[(g + 1) % m] : w[g];
                if (outside_end == c) {
                    if (na < 2) active[na] = g;
                    na++;
                } else {
                    if (np < 2) passive[np] = g;
                    np++;
                }
            }
            if (na != 2) continue;
            std::vector<char> inside2 = inside;
            inside2[c] = 1;
            if (!tangle_boundary(sd.d, inside2)) continue;
            FlypeOpportunity of;
            of.c = c;
            for (int v = 0; v < n; v++)
                if (inside[v]) of.tangle.push_back(v);
            of.cut_gaps = cut;
            of.active_gaps = active;
            of.passive_gaps = passive;
            of.type = classify_connector(sd.d, inside) == Connector::X ? "I" : "II";
            out.push_back(std::move(of));
        }
    }
    return out;
}

namespace {

struct WordCode {
    std::vector<int> letters;
    std::vector<Strand> ou;
};

// The word-level flype: delete both letters of c, reinsert one into each
// passive gap, re-alternate over/under anchored at a crossing that did not
// move. Gap i means "between positions i and i+1".
WordCode flype_word(const WordCode& in, int c, std::array<int, 2> passive, const std::vector<char>& in_tangle) {
    int m = static_cast<int>(in.letters.size());
    WordCode out;
    for (int i = 0; i < m; i++) {
        if (in.letters[i] != c) out.letters.push_back(in.letters[i]);
        if (i == passive[0] || i == passive[1]) out.letters.push_back(c);
    }
    int anchor = -1;
    for (int i = 0; i < m && anchor < 0; i++)
        if (in.letters[i] != c && !in_tangle[in.letters[i]]) anchor = in.letters[i];
    if (anchor < 0)
        throw Error(ErrorKind::InvalidOpportunity, "no crossing outside the flype region");
    auto first_of = [](const std::vector<int>& v, int x) {
        return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
    };
    Strand f = in.ou[first_of(in.letters, anchor)];
    int p_new = first_of(out.letters, anchor);
    for (int i = 0; i < m; i++) {
        bool same = (i - p_new) % 2 == 0;
        out.ou.push_back(same == (f == Strand::Over) ? Strand::Over : Strand::Under);
    }
    return out;
}

SignedDiagram rebuild(const WordCode& wc, const std::vector<int>& eps) {
    GaussCode code(wc.letters, wc.ou, eps);
    return {validate_signed_code(code), eps};
}

WordCode word_of(const SignedDiagram& sd) {
    WordCode wc;
    auto circ = sd.d.circuit();
    for (const EndRef& e : circ) {
        wc.letters.push_back(e.v);
        wc.ou.push_back(sd.d.over_pair(e.v) == e.s % 2 ? Strand::Over : Strand::Under);
    }
    return wc;
}

} // namespace

SignedDiagram apply_flype(const SignedDiagram& sd, const FlypeOpportunity& of) {
    int n = sd.d.crossings();
    std::vector<char> inT(n, 0);
    for (int v : of.tangle) inT[v] = 1;
    try {
        WordCode wc = flype_word(word_of(sd), of.c, of.passive_gaps, inT);
        return rebuild(wc, sd.eps);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidOpportunity) throw;
        throw Error(ErrorKind::InvalidOpportunity, std::string("flype surgery failed: ") + e.what());
    }
}

FlypeOrbit enumerate_orbit(const SignedDiagram& sd) {
    require_knot(sd);
    FlypeOrbit orbit;
    WordCode w0 = word_of(sd);
    SignedDiagram base = rebuild(w0, sd.eps);
    orbit.members.push_back(base);
    orbit.words.push_back(w0.letters);
    orbit.keys.push_back(diagram_key(base));
    std::map<std::string, int> index{{orbit.keys[0], 0}};
    std::vector<std::vector<Strand>> ous{w0.ou};

    // The diagram of every member is rebuilt from its surgery-aligned word,
    // so its circuit is that word rotated to start at the first occurrence
    // of crossing 0; gap indices convert by that offset.
    for (size_t head = 0; head < orbit.members.size(); head++) {
        const SignedDiagram cur = orbit.members[head];
        const std::vector<int> word = orbit.words[head];
        const std::vector<Strand> ou = ous[head];
        int m = static_cast<int>(word.size());
        int start = static_cast<int>(std::find(word.begin(), word.end(), 0) - word.begin());
        for (const auto& of : find_flype_opportunities(cur)) {
            std::vector<char> inT(cur.d.crossings(), 0);
            for (int v : of.tangle) inT[v] = 1;
            std::array<int, 2> passive{(start + of.passive_gaps[0]) % m, (start + of.passive_gaps[1]) % m};
            WordCode wc = flype_word({word, ou}, of.c, passive, inT);
            SignedDiagram child = rebuild(wc, sd.eps);
            std::string key = diagram_key(child);
            if (key == orbit.keys[head]) continue;  // trivial move
            auto it = index.find(key);
            int idx;
            if (it == index.end()) {
                idx = static_cast<int>(orbit.members.size());
                index.emplace(key, idx);
                orbit.members.push_back(child);
                orbit.words.push_back(wc.letters);
                orbit.keys.push_back(key);
                ous.push_back(wc.ou);
            } else {
                idx = it->second;
            }
            orbit.moves.push_back({static_cast<int>(head), idx, of.c});
            orbit.moving_labels.insert(of.c);
        }
    }
    return orbit;
}

namespace {

std::vector<int> min_rotation(const std::vector<int>& v) {
    int m = static_cast<int>(v.size());
    if (m == 0) return v;
    std::vector<int> best, cur(m);
    for (int s = 0; s < m; s++) {
        for (int i = 0; i < m; i++) cur[i] = v[(s + i) % m];
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

// The flype state sum, superposed over one orbit. Every orbit member's word
// differs from the others only by where the travelling crossings sit, so
// deleting those crossings leaves one common cyclic word: the skeleton.
// Each traveller is then located by the skeleton gaps holding its letters.
struct Superposition {
    std::vector<int> eps;                                  // per label
    std::vector<int> skeleton;                             // stationary letters, fixed rotation
    std::set<int> movers;
    std::map<int, std::set<std::pair<int, int>>> positions;  // mover -> gap pairs
};

Superposition superpose(const SignedDiagram& sd, bool reroot) {
    Superposition sp;
    sp.eps = sd.eps;
    SignedDiagram base = sd;
    if (reroot) {
        // Deterministic orbit representative: restart from the member with
        // the least canonical key, so the result does not depend on which
        // member (or labeling) we started from.
        FlypeOrbit orbit = enumerate_orbit(sd);
        size_t best = 0;
        for (size_t i = 1; i < orbit.keys.size(); i++)
            if (orbit.keys[i] < orbit.keys[best]) best = i;
        base = make_signed(GaussCode::parse(orbit.keys[best]));
        sp.eps = base.eps;
    }
    int n = static_cast<int>(sp.eps.size());

    // Torsad families of the base diagram. A flype whose effect vanishes
    // once the active crossing's own family is deleted just shuffles twists
    // inside that family; those cancel in the state sum (p = q) and stay in
    // place. Every other flype lets its crossing travel.
    std::vector<int> fam(n, -1);
    {
        CondensedCD ccd = condense_chord_diagram(build_chord_diagram(GaussCode(base.d.word(), std::nullopt, std::nullopt)));
        for (size_t f = 0; f < ccd.members.size(); f++)
            for (int v : ccd.members[f]) fam[v] = static_cast<int>(f);
    }
    // The word with c kept but its family mates removed: unchanged by a
    // shuffle inside the family, changed when c leaves it.
    auto strip = [&](const std::vector<int>& w, int c) {
        std::vector<int> r;
        for (int x : w)
            if (x == c || fam[x] != fam[c]) r.push_back(x);
        return min_rotation(r);
    };

    // Walk the flype graph over placements: labelled words where travellers
    // sit at every position they can reach. Placements reached only by
    // in-family shuffles are not entered.
    std::vector<std::vector<int>> words;
    {
        std::set<std::vector<std::pair<int, int>>> seen;
        auto state_key = [](const WordCode& wc) {
            int m = static_cast<int>(wc.letters.size());
            std::vector<std::pair<int, int>> best, cand(m);
            for (int s = 0; s < m; s++) {
                for (int i = 0; i < m; i++)
                    cand[i] = {wc.letters[(s + i) % m], static_cast<int>(wc.ou[(s + i) % m])};
                if (best.empty() || cand < best) best = cand;
            }
            return best;
        };
        std::vector<WordCode> queue{word_of(base)};
        seen.insert(state_key(queue[0]));
        for (size_t head = 0; head < queue.size(); head++) {
            const WordCode cur = queue[head];
            words.push_back(cur.letters);
            SignedDiagram cd = rebuild(cur, sp.eps);
            int m = static_cast<int>(cur.letters.size());
            // The rebuilt circuit is the stored word rotated to start at the
            // first occurrence of crossing 0; gap indices convert by that.
            int start = static_cast<int>(std::find(cur.letters.begin(), cur.letters.end(), 0) - cur.letters.begin());
            for (const auto& of : find_flype_opportunities(cd)) {
                std::vector<char> inT(n, 0);
                for (int v : of.tangle) inT[v] = 1;
                std::array<int, 2> passive{(start + of.passive_gaps[0]) % m, (start + of.passive_gaps[1]) % m};
                WordCode child = flype_word(cur, of.c, passive, inT);
                if (strip(child.letters, of.c) == strip(cur.letters, of.c)) continue;
                sp.movers.insert(of.c);
                if (seen.insert(state_key(child)).second) queue.push_back(child);
            }
        }
    }

    auto reduce = [&](const std::vector<int>& w, const std::set<int>& movers) {
        std::vector<int> r;
        for (int x : w)
            if (!movers.count(x)) r.push_back(x);
        return r;
    };
    sp.skeleton = min_rotation(reduce(words[0], sp.movers));
    int L = static_cast<int>(sp.skeleton.size());

    // Record, for every placement and every rotation matching the skeleton,
    // which gap pair each traveller occupies. Gap g = right before the g-th
    // skeleton letter.
    for (const auto& word : words) {
        int m = static_cast<int>(word.size());
        for (int s = 0; s < m; s++) {
            std::vector<int> w2(m);
            for (int i = 0; i < m; i++) w2[i] = word[(s + i) % m];
            if (reduce(w2, sp.movers) != sp.skeleton) continue;
            std::map<int, int> firstg;
            int g = 0;
            for (int i = 0; i < m; i++) {
                int x = w2[i];
                if (!sp.movers.count(x)) {
                    g++;
                    continue;
                }
                int gg = L == 0 ? 0 : g % L;
                auto it = firstg.find(x);
                if (it == firstg.end())
                    firstg[x] = gg;
                else
                    sp.positions[x].insert(std::minmax(it->second, gg));
            }
        }
    }
    return sp;
}

} // namespace

WeightedChordDiagram build_cwcd(const SignedDiagram& sd) {
    Superposition sp = superpose(sd, true);
    int n = static_cast<int>(sp.eps.size());
    int L = static_cast<int>(sp.skeleton.size());

    WeightedChordDiagram w;
    w.slots = L;
    w.skel_partner.assign(L, -1);
    w.skel_num.assign(L, 0);
    w.skel_den.assign(L, 1);
    std::vector<int> first(n, -1);
    for (int i = 0; i < L; i++) {
        int x = sp.skeleton[i];
        if (first[x] < 0) {
            first[x] = i;
        } else {
            w.skel_partner[first[x]] = i;
            w.skel_partner[i] = first[x];
        }
        w.skel_num[i] = sp.eps[x];
    }

    // One flype cycle = the travellers sharing a position set and a sign;
    // its p chords are smeared over its q interval positions.
    std::map<std::pair<std::vector<std::pair<int, int>>, int>, int> group_size;
    for (int x : sp.movers) {
        std::vector<std::pair<int, int>> P(sp.positions[x].begin(), sp.positions[x].end());
        group_size[{P, sp.eps[x]}]++;
    }
    for (auto& [gk, p] : group_size) {
        const auto& [P, sign] = gk;
        int q = static_cast<int>(P.size());
        int g = std::gcd(p, q);
        for (auto [g1, g2] : P) w.gap_chords.push_back({g1, g2, sign * (p / g), q / g});
    }
    std::sort(w.gap_chords.begin(), w.gap_chords.end());
    return w;
}

std::vector<FlypeCycle> find_flype_cycles(const SignedDiagram& sd) {
    require_knot(sd);
    Superposition sp = superpose(sd, false);

    std::vector<FlypeCycle> out;
    std::map<std::pair<std::vector<std::pair<int, int>>, int>, FlypeCycle> mob;
    for (int x : sp.movers) {
        std::vector<std::pair<int, int>> P(sp.positions[x].begin(), sp.positions[x].end());
        auto& c = mob[{P, sp.eps[x]}];
        c.members.push_back(x);
        c.q = static_cast<int>(P.size());
        c.sign = sp.eps[x];
    }
    for (auto& [k, c] : mob) {
        c.p = static_cast<int>(c.members.size());
        out.push_back(std::move(c));
    }

    // Stationary crossings: one cycle per torsad (p = q, weights +-1).
    // Condense the full diagram so travellers still separate the torsads
    // they run between, then drop them from each family.
    if (!sp.skeleton.empty()) {
        CondensedCD ccd = condense_chord_diagram(build_chord_diagram(GaussCode(sd.d.word(), std::nullopt, std::nullopt)));
        for (const auto& mem : ccd.members) {
            FlypeCycle c;
            for (int id : mem)
                if (!sp.movers.count(id)) c.members.push_back(id);
            if (c.members.empty()) continue;
            std::sort(c.members.begin(), c.members.end());
            c.p = c.q = static_cast<int>(c.members.size());
            c.sign = sp.eps[c.members[0]];
            for (int v : c.members)
                if (sp.eps[v] != c.sign) c.sign = 0;
            out.push_back(std::move(c));
        }
    }
    return out;
}

WeightedChordDiagram flip_signs(const WeightedChordDiagram& w) {
    WeightedChordDiagram out = w;
    for (int& x : out.skel_num) x = -x;
    for (auto& c : out.gap_chords) c.num = -c.num;
    std::sort(out.gap_chords.begin(), out.gap_chords.end());
    return out;
}

WeightedChordDiagram transform_cwcd(const WeightedChordDiagram& w, int k, bool reflect) {
    int L = w.slots;
    WeightedChordDiagram out = w;
    if (L == 0) return out;
    auto ms = [&](int i) { return reflect ? (L - 1 - i + k) % L : (i + k) % L; };
    auto mg = [&](int g) { return reflect ? (L - g + k) % L : (g + k) % L; };
    for (int i = 0; i < L; i++) {
        out.skel_partner[ms(i)] = ms(w.skel_partner[i]);
        out.skel_num[ms(i)] = w.skel_num[i];
        out.skel_den[ms(i)] = w.skel_den[i];
    }
    for (auto& c : out.gap_chords) {
        int a = mg(c.g1), b = mg(c.g2);
        c.g1 = std::min(a, b);
        c.g2 = std::max(a, b);
    }
    std::sort(out.gap_chords.begin(), out.gap_chords.end());
    return out;
}

std::string cwcd_encode(const WeightedChordDiagram& w) {
    std::string s = "L" + std::to_string(w.slots) + ";";
    for (int i = 0; i < w.slots; i++) {
        s += std::to_string((w.skel_partner[i] - i + w.slots) % w.slots);
        s += "/" + std::to_string(w.skel_num[i]) + ":" + std::to_string(w.skel_den[i]) + ";";
    }
    s += "|";
    for (const auto& c : w.gap_chords)
        s += std::to_string(c.g1) + "," + std::to_string(c.g2) + "," + std::to_string(c.num) + "/" +
             std::to_string(c.den) + ";";
    return s;
}

std::string cwcd_canonical(const WeightedChordDiagram& w) {
    if (w.slots == 0) return cwcd_encode(w);
    std::string best;
    for (int reflect = 0; reflect < 2; reflect++)
        for (int k = 0; k < w.slots; k++) {
            std::string s = cwcd_encode(transform_cwcd(w, k, reflect != 0));
            if (best.empty() || s < best) best = std::move(s);
        }
    return best;
}

} // namespace knot
