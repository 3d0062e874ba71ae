#include "knot/interlace.hpp"

namespace knot {

Graph build_interlacement(const ChordDiagram& cd) {
    int n = cd.size();
    Graph g = Graph::make(n);
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++)
            if (chords_interlaced(cd, a, b)) g.add_edge(a, b);
    if (cd.has_sign()) g.weight = cd.chord_sign();
    return g;
}

Graph build_interlacement(const GaussCode& code) {
    return build_interlacement(build_chord_diagram(code));
}

bool is_cocycle(const Graph& g, const std::vector<std::pair<int, int>>& f) {
    int n = g.size();
    std::vector<std::vector<signed char>> flip(n, std::vector<signed char>(n, 0));
    for (auto [a, b] : f) flip[a][b] = flip[b][a] = 1;
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; s++) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; u++) {
                if (!g.adj[v][u]) continue;
                int want = color[v] ^ flip[v][u];
                if (color[u] < 0) {
                    color[u] = want;
                    stack.push_back(u);
                } else if (color[u] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

RealizabilityVerdict check_realizability(const GaussCode& code) {
    Graph g = build_interlacement(code);
    int n = g.size();
    for (int v = 0; v < n; v++)
        if (g.degree(v) % 2 != 0)
            return {1, "vertex " + g.label[v] + " has odd neighborhood size " + std::to_string(g.degree(v))};
    auto common = [&](int x, int y) {
        int c = 0;
        for (int u = 0; u < n; u++) c += g.adj[x][u] && g.adj[y][u];
        return c;
    };
    for (int x = 0; x < n; x++)
        for (int y = x + 1; y < n; y++)
            if (!g.adj[x][y] && common(x, y) % 2 != 0)
                return {2, "non-adjacent pair (" + g.label[x] + "," + g.label[y] + ") has odd common neighborhood " +
                               std::to_string(common(x, y))};
    std::vector<std::pair<int, int>> f;
    for (int x = 0; x < n; x++)
        for (int y = x + 1; y < n; y++)
            if (g.adj[x][y] && common(x, y) % 2 == 0) f.emplace_back(x, y);
    if (!is_cocycle(g, f)) {
        std::string w = "even-intersection edges {";
        for (size_t i = 0; i < f.size(); i++) {
            if (i) w += ",";
            w += g.label[f[i].first] + "-" + g.label[f[i].second];
        }
        w += "} are not a cocycle";
        return {3, w};
    }
    return {};
}

long long count_realizations(const GaussCode& code) {
    auto verdict = check_realizability(code);
    if (!verdict.realizable())
        throw Error(ErrorKind::NotRealizable,
                    "condition (" + std::string(verdict.failed_condition == 1   ? "i"
                                                : verdict.failed_condition == 2 ? "ii"
                                                                                : "iii") +
                        ") fails: " + verdict.witness);
    if (code.empty()) return 1;
    int r = component_count(build_interlacement(code));
    return 1ll << (r - 1);
}

} // namespace knot
