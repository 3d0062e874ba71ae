#include "knot/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace knot {

Graph Graph::make(int n) {
    Graph g;
    g.adj.assign(n, std::vector<signed char>(n, 0));
    g.weight.assign(n, 0);
    g.label.resize(n);
    for (int v = 0; v < n; v++) g.label[v] = std::to_string(v + 1);
    return g;
}

int Graph::edge_count() const {
    int e = 0;
    for (int i = 0; i < size(); i++)
        for (int j = i + 1; j < size(); j++) e += adj[i][j];
    return e;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < size(); u++) d += adj[v][u];
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < size(); u++)
        if (adj[v][u]) out.push_back(u);
    return out;
}

Graph Graph::complemented() const {
    Graph g = *this;
    for (int i = 0; i < size(); i++)
        for (int j = 0; j < size(); j++) g.adj[i][j] = i != j && !adj[i][j];
    for (int& w : g.weight) w = -w;
    g.esign.clear();
    g.dir.clear();
    return g;
}

std::vector<int> connected_components(const Graph& g) {
    int n = g.size();
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; s++) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; u++)
                if (g.adj[v][u] && comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
        }
        c++;
    }
    return comp;
}

int component_count(const Graph& g) {
    auto comp = connected_components(g);
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

namespace {

// Code for the ordered vertex pair (placed-earlier, placed-later).
inline int pair_code(const Graph& g, int i, int j) {
    if (!g.adj[i][j]) return 0;
    int s = g.esign.empty() ? 0 : (g.esign[i][j] > 0 ? 0 : 1);
    int d = g.dir.empty() ? 0 : (g.dir[i][j] ? 1 : (g.dir[j][i] ? 2 : 0));
    return 1 + s * 3 + d;
}

// Isomorphism-invariant vertex ranks by iterated neighborhood refinement.
std::vector<int> refine_ranks(const Graph& g) {
    int n = g.size();
    std::vector<std::vector<long long>> sig(n);
    for (int v = 0; v < n; v++) {
        long long out = 0, in = 0, ssum = 0;
        for (int u = 0; u < n; u++) {
            if (!g.dir.empty() && g.adj[v][u]) {
                out += g.dir[v][u];
                in += g.dir[u][v];
            }
            if (!g.esign.empty() && g.adj[v][u]) ssum += g.esign[v][u];
        }
        sig[v] = {g.weight[v], g.degree(v), out, in, ssum};
    }
    std::vector<int> rank(n, 0);
    for (int round = 0; round <= n; round++) {
        std::vector<std::vector<long long>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; v++)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (next == rank) break;
        rank = next;
        for (int v = 0; v < n; v++) {
            std::vector<long long> nb;
            for (int u = 0; u < n; u++)
                if (g.adj[v][u]) nb.push_back(rank[u] * 8 + pair_code(g, v, u));
            std::sort(nb.begin(), nb.end());
            sig[v] = {rank[v]};
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
    }
    return rank;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> rank;       // invariant class per vertex
    std::vector<int> slot_rank;  // required class per position
    std::vector<int> perm;       // position -> vertex
    std::vector<char> used;
    std::vector<int> cur, best;
    bool have = false;

    explicit CanonSearch(const Graph& gg) : g(gg), n(gg.size()) {
        rank = refine_ranks(g);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });
        slot_rank.resize(n);
        for (int k = 0; k < n; k++) slot_rank[k] = rank[order[k]];
        perm.assign(n, -1);
        used.assign(n, 0);
    }

    void dfs(int k, bool already_less) {
        if (k == n) {
            if (!have || cur < best) {
                best = cur;
                have = true;
            }
            return;
        }
        for (int v = 0; v < n; v++) {
            if (used[v] || rank[v] != slot_rank[k]) continue;
            size_t base = cur.size();
            bool less = already_less, prune = false;
            for (int i = 0; i < k; i++) {
                int code = pair_code(g, perm[i], v);
                cur.push_back(code);
                if (have && !less) {
                    int b = best[base + i];
                    if (code > b) { prune = true; break; }
                    if (code < b) less = true;
                }
            }
            if (!prune) {
                used[v] = 1;
                perm[k] = v;
                dfs(k + 1, less);
                perm[k] = -1;
                used[v] = 0;
            }
            cur.resize(base);
        }
    }
};

} // namespace

std::string canonical_key(const Graph& g) {
    CanonSearch s(g);
    s.dfs(0, false);
    std::string out = "n" + std::to_string(g.size());
    out += g.esign.empty() ? "" : "s";
    out += g.dir.empty() ? "" : "d";
    out += ":";
    for (int k = 0; k < g.size(); k++) out += std::to_string(s.slot_rank[k]) + ",";
    // rank encodes the weight class; spell the weights out anyway so the key
    // is readable and unambiguous
    {
        std::vector<int> ws = g.weight;
        std::sort(ws.begin(), ws.end());
        out += "w";
        for (int w : ws) out += std::to_string(w) + ",";
    }
    out += "e";
    for (int c : s.best) out += static_cast<char>('0' + c);
    return out;
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    return canonical_key(a) == canonical_key(b);
}

} // namespace knot
