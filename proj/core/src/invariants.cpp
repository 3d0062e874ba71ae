#include "knot/invariants.hpp"

#include <algorithm>
#include <set>

#include "knot/condense.hpp"

namespace knot {

bool same_knot(const SignedDiagram& a, const SignedDiagram& b) {
    require_knot(a);
    require_knot(b);
    FlypeOrbit orbit = enumerate_orbit(a);
    std::string bk = diagram_key(b);
    return std::find(orbit.keys.begin(), orbit.keys.end(), bk) != orbit.keys.end();
}

ChiralityProfile chirality_profile(const SignedDiagram& sd) {
    WeightedChordDiagram w = build_cwcd(sd);
    std::string self = cwcd_encode(w);
    std::string flipped = cwcd_encode(flip_signs(w));
    ChiralityProfile p;
    int L = std::max(w.slots, 1);
    for (int k = 0; k < L; k++) {
        std::string rot = cwcd_encode(transform_cwcd(w, k, false));
        std::string refl = cwcd_encode(transform_cwcd(w, k, true));
        if (rot == flipped) p.achiral_plus = true;
        if (refl == flipped) p.achiral_minus = true;
        if (refl == self) p.invertible = true;
    }
    if (w.slots == 0) {
        // degenerate: no skeleton to act on; only the sign flip is testable
        p.achiral_minus = p.achiral_plus;
        p.invertible = true;
    }
    return p;
}

SymmetryGroup symmetry_group(const SignedDiagram& sd) {
    WeightedChordDiagram w = build_cwcd(sd);
    std::string self = cwcd_encode(w);
    SymmetryGroup g;
    g.order = 0;
    for (int refl = 0; refl < 2; refl++)
        for (int k = 0; k < std::max(w.slots, 1); k++) {
            if (cwcd_encode(transform_cwcd(w, k, refl != 0)) != self) continue;
            g.order++;
            if (k != 0 || refl != 0)
                g.generators.push_back((refl ? "refl " : "rot ") + std::to_string(k));
        }
    if (g.order == 0) g.order = 1;
    return g;
}

Graph build_enhanced_lg(const SignedDiagram& sd, bool with_eps, bool with_alpha) {
    if (sd.eps.empty() && (with_eps || with_alpha))
        throw Error(ErrorKind::MissingSigns, "enhanced graphs need crossing signs");
    int n = sd.d.crossings();
    auto circ = sd.d.circuit();
    int m = static_cast<int>(circ.size());
    std::vector<std::pair<int, int>> pos(n, {-1, -1});
    for (int i = 0; i < m; i++) {
        int v = circ[i].v;
        (pos[v].first < 0 ? pos[v].first : pos[v].second) = i;
    }
    Graph g = Graph::make(n);
    auto interlaced = [&](int a, int b) {
        auto in = [&](int x) { return x > pos[a].first && x < pos[a].second; };
        return in(pos[b].first) != in(pos[b].second);
    };
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++)
            if (interlaced(a, b)) g.add_edge(a, b);
    if (with_eps) g.weight = sd.eps;
    if (with_alpha) {
        SignData signs = compute_signs(sd.d);
        std::vector<int> tail(n), head(n);
        for (int v = 0; v < n; v++) {
            tail[v] = signs.path_sign[v] > 0 ? pos[v].first : pos[v].second;
            head[v] = signs.path_sign[v] > 0 ? pos[v].second : pos[v].first;
        }
        g.dir.assign(n, std::vector<signed char>(n, 0));
        auto in_arc = [&](int x, int from, int to) {
            // strictly inside the forward arc from -> to
            int len = (to - from + m) % m;
            int off = (x - from + m) % m;
            return off > 0 && off < len;
        };
        for (int a = 0; a < n; a++)
            for (int b = 0; b < n; b++)
                if (a != b && g.adj[a][b] && in_arc(tail[b], tail[a], head[a])) g.dir[a][b] = 1;
    }
    return g;
}

const char* tangle_sym_name(TangleSym s) {
    switch (s) {
        case TangleSym::Id: return "Id";
        case TangleSym::H: return "H";
        case TangleSym::V: return "V";
        case TangleSym::Pi: return "pi";
    }
    return "?";
}

SignedDiagram mutate(const SignedDiagram& sd, const std::vector<char>& inside, TangleSym sym) {
    auto tb = tangle_boundary(sd.d, inside);
    if (!tb)
        throw Error(ErrorKind::NotATangle, "cut does not bound a 4-ended disk tangle");
    if (sym == TangleSym::Id) return sd;

    int n = sd.d.crossings();
    auto circ = sd.d.circuit();
    int m = static_cast<int>(circ.size());
    int start = -1;
    for (int i = 0; i < m && start < 0; i++)
        if (inside[circ[i].v] && !inside[circ[(i - 1 + m) % m].v])
            for (int j = 0; j < 4; j++)
                if (tb->stubs[j] == circ[i]) start = j;
    if (start < 0)
        throw Error(ErrorKind::NotATangle, "circuit entry not on the tangle boundary");

    bool mirror_inside = sym == TangleSym::H || sym == TangleSym::V;
    auto smap = [&](const EndRef& e) {
        return mirror_inside && inside[e.v] ? EndRef{e.v, (4 - e.s) % 4} : e;
    };
    std::vector<std::array<EndRef, 4>> att(n);
    for (int v = 0; v < n; v++)
        for (int s = 0; s < 4; s++) {
            EndRef from = smap({v, s});
            att[from.v][from.s] = smap(sd.d.att(v, s));
        }
    std::vector<unsigned char> over(n);
    for (int v = 0; v < n; v++) over[v] = sd.d.over_pair(v) ^ (mirror_inside && inside[v] ? 1 : 0);

    // Corner i (0=NW,1=NE,2=SE,3=SW starting at the circuit entry) now
    // receives the tangle content formerly at corner sigma(i).
    auto sigma = [&](int i) {
        switch (sym) {
            case TangleSym::H: return i ^ 3;  // 0<->3, 1<->2
            case TangleSym::V: return i ^ 1;  // 0<->1, 2<->3
            default: return i ^ 2;            // pi: 0<->2, 1<->3
        }
    };
    for (int i = 0; i < 4; i++) {
        const EndRef& src = tb->stubs[(start + sigma(i)) % 4];
        EndRef moved = smap(src);  // tangle stub after the flip
        const EndRef& dst = tb->stubs[(start + i) % 4];
        EndRef out_i = sd.d.att(dst.v, dst.s);  // fixed outside end at corner i
        att[out_i.v][out_i.s] = moved;
        att[moved.v][moved.s] = out_i;
    }
    Diagram d2(std::move(att), std::move(over));
    if (!d2.spherical() || d2.circuit().empty())
        throw Error(ErrorKind::SplitsIntoLink, "mutation does not yield a single spherical circuit");
    // The local-writhe attribute is carried along and negated inside the
    // tangle for H and V, kept for pi.  It is a transported decoration: for H
    // and V it deliberately disagrees with the writhe recomputed from the new
    // rotation system, and that disagreement is what lets the decorated
    // enlacement graphs tell the mutants apart.
    std::vector<int> eps2 = sd.eps;
    if (mirror_inside && !eps2.empty())
        for (int v = 0; v < n; v++)
            if (inside[v]) eps2[v] = -eps2[v];
    return {std::move(d2), std::move(eps2)};
}

namespace {

int direct_edges(const Diagram& d, const std::vector<char>& A, const std::vector<char>& B) {
    int cnt = 0;
    for (int v = 0; v < d.crossings(); v++) {
        if (!A[v]) continue;
        for (int s = 0; s < 4; s++)
            if (B[d.att(v, s).v]) cnt++;
    }
    return cnt;
}

std::vector<char> unite(const std::vector<char>& a, const std::vector<char>& b) {
    std::vector<char> u(a.size());
    for (size_t i = 0; i < a.size(); i++) u[i] = a[i] || b[i];
    return u;
}

} // namespace

SignedDiagram permute_tangles(const SignedDiagram& sd, const std::vector<std::vector<char>>& cuts,
                              const std::vector<int>& perm) {
    int k = static_cast<int>(cuts.size());
    if (static_cast<int>(perm.size()) != k)
        throw Error(ErrorKind::NotABundle, "permutation size mismatch");
    for (int i = 0; i < k; i++)
        for (int j = i + 1; j < k; j++)
            for (size_t v = 0; v < cuts[i].size(); v++)
                if (cuts[i][v] && cuts[j][v])
                    throw Error(ErrorKind::NotABundle, "tangle cuts overlap");
    for (int i = 0; i < k; i++)
        if (!tangle_boundary(sd.d, cuts[i]))
            throw Error(ErrorKind::NotABundle, "cut " + std::to_string(i + 1) + " is not a tangle");
    for (int i = 0; i + 1 < k; i++)
        if (direct_edges(sd.d, cuts[i], cuts[i + 1]) != 2)
            throw Error(ErrorKind::NotABundle, "tangles are not in series along a 2-strand band");

    SignedDiagram cur = sd;
    std::vector<int> arrangement(k);
    for (int i = 0; i < k; i++) arrangement[i] = i;
    std::vector<int> want = perm;
    auto target_pos = [&](int t) {
        return static_cast<int>(std::find(want.begin(), want.end(), t) - want.begin());
    };
    try {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < k; i++) {
                if (target_pos(arrangement[i]) <= target_pos(arrangement[i + 1])) continue;
                const auto& A = cuts[arrangement[i]];
                const auto& B = cuts[arrangement[i + 1]];
                auto U = unite(A, B);
                if (!tangle_boundary(cur.d, U) || direct_edges(cur.d, A, B) != 2)
                    throw Error(ErrorKind::NotABundle, "adjacent tangles do not form a tangle union");
                cur = mutate(cur, U, TangleSym::Pi);
                cur = mutate(cur, A, TangleSym::Pi);
                cur = mutate(cur, B, TangleSym::Pi);
                std::swap(arrangement[i], arrangement[i + 1]);
                changed = true;
            }
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SplitsIntoLink)
            throw Error(ErrorKind::WouldSplit, e.what());
        throw;
    }
    return cur;
}

} // namespace knot
