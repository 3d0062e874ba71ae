#include "knot/condense.hpp"

#include <algorithm>
#include <set>

namespace knot {

CondensedGraph neighborhood_graph(const Graph& g) {
    CondensedGraph out;
    out.g = g;
    out.provenance.resize(g.size());
    for (int v = 0; v < g.size(); v++) out.provenance[v] = {v};

    auto closed_equal = [&](int x, int y) {
        for (int u = 0; u < out.g.size(); u++) {
            if (u == x || u == y) continue;
            if (out.g.adj[x][u] != out.g.adj[y][u]) return false;
        }
        return true;
    };
    bool merged = true;
    while (merged) {
        merged = false;
        int n = out.g.size();
        for (int x = 0; x < n && !merged; x++)
            for (int y = x + 1; y < n && !merged; y++) {
                bool ok;
                int w;
                if (out.g.adj[x][y]) {
                    ok = out.g.weight[x] >= 0 && out.g.weight[y] >= 0 && closed_equal(x, y);
                    w = out.g.weight[x] + out.g.weight[y] + 1;
                } else {
                    ok = out.g.weight[x] <= 0 && out.g.weight[y] <= 0 && closed_equal(x, y);
                    w = out.g.weight[x] + out.g.weight[y] - 1;
                }
                if (!ok) continue;
                Graph ng = Graph::make(n - 1);
                std::vector<std::vector<int>> np;
                std::vector<int> keep;
                for (int v = 0; v < n; v++)
                    if (v != y) keep.push_back(v);
                for (int i = 0; i < n - 1; i++) {
                    ng.weight[i] = out.g.weight[keep[i]];
                    ng.label[i] = out.g.label[keep[i]];
                    np.push_back(out.provenance[keep[i]]);
                    for (int j = 0; j < n - 1; j++)
                        ng.adj[i][j] = out.g.adj[keep[i]][keep[j]];
                }
                int xi = static_cast<int>(std::find(keep.begin(), keep.end(), x) - keep.begin());
                ng.weight[xi] = w;
                ng.label[xi] = out.g.label[x] + "+" + out.g.label[y];
                np[xi].insert(np[xi].end(), out.provenance[y].begin(), out.provenance[y].end());
                std::sort(np[xi].begin(), np[xi].end());
                out.g = std::move(ng);
                out.provenance = std::move(np);
                merged = true;
            }
    }
    return out;
}

CondensedCD condense_chord_diagram(const ChordDiagram& cd) {
    // Working copy: cyclic slot list of chord record ids.
    struct Rec {
        int weight = 0;
        std::vector<int> members;
        bool alive = true;
    };
    std::vector<Rec> rec(cd.size());
    std::vector<int> slots(cd.slots());
    for (int i = 0; i < cd.slots(); i++) slots[i] = cd.chord_of()[i];
    for (int c = 0; c < cd.size(); c++) rec[c].members = {c};

    auto positions = [&](int c) {
        std::pair<int, int> p{-1, -1};
        for (int i = 0; i < static_cast<int>(slots.size()); i++)
            if (slots[i] == c) (p.first < 0 ? p.first : p.second) = i;
        return p;
    };
    bool merged = true;
    while (merged) {
        merged = false;
        int M = static_cast<int>(slots.size());
        auto adjacent = [&](int i, int j) { return (i + 1) % M == j || (j + 1) % M == i; };
        std::vector<int> alive;
        for (int c = 0; c < static_cast<int>(rec.size()); c++)
            if (rec[c].alive) alive.push_back(c);
        for (size_t ai = 0; ai < alive.size() && !merged; ai++)
            for (size_t bi = ai + 1; bi < alive.size() && !merged; bi++) {
                int a = alive[ai], b = alive[bi];
                auto [i1, i2] = positions(a);
                auto [j1, j2] = positions(b);
                bool near = (adjacent(i1, j1) && adjacent(i2, j2)) || (adjacent(i1, j2) && adjacent(i2, j1));
                if (!near) continue;
                bool crossing = (j1 > i1 && j1 < i2) != (j2 > i1 && j2 < i2);
                if (crossing) {
                    if (rec[a].weight < 0 || rec[b].weight < 0) continue;
                    rec[a].weight += rec[b].weight + 1;
                } else {
                    if (rec[a].weight > 0 || rec[b].weight > 0) continue;
                    rec[a].weight += rec[b].weight - 1;
                }
                rec[a].members.insert(rec[a].members.end(), rec[b].members.begin(), rec[b].members.end());
                rec[b].alive = false;
                std::vector<int> ns;
                for (int s : slots)
                    if (s != b) ns.push_back(s);
                slots = std::move(ns);
                merged = true;
            }
    }
    CondensedCD out;
    std::vector<int> newid(rec.size(), -1);
    int next = 0;
    std::vector<int> pairing(slots.size(), -1), firstpos(rec.size(), -1);
    for (int i = 0; i < static_cast<int>(slots.size()); i++) {
        int c = slots[i];
        if (firstpos[c] < 0) {
            firstpos[c] = i;
            newid[c] = next++;
        } else {
            pairing[firstpos[c]] = i;
            pairing[i] = firstpos[c];
        }
    }
    out.cd = ChordDiagram(std::move(pairing));
    out.weight.resize(next);
    out.members.resize(next);
    for (int c = 0; c < static_cast<int>(rec.size()); c++)
        if (rec[c].alive) {
            std::sort(rec[c].members.begin(), rec[c].members.end());
            out.weight[out.cd.chord_of()[firstpos[c]]] = rec[c].weight;
            out.members[out.cd.chord_of()[firstpos[c]]] = rec[c].members;
        }
    return out;
}

std::vector<std::vector<int>> find_2tangles(const Graph& g) {
    int n = g.size();
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 1; mask + 1 < (1ul << n); mask++) {
        std::vector<int> A, B;
        for (int t = 0; t < n; t++) {
            if (!((mask >> t) & 1)) continue;
            for (int v = 0; v < n; v++)
                if (!((mask >> v) & 1) && g.adj[t][v]) {
                    A.push_back(t);
                    break;
                }
        }
        for (int v = 0; v < n; v++) {
            if ((mask >> v) & 1) continue;
            for (int t = 0; t < n; t++)
                if (((mask >> t) & 1) && g.adj[v][t]) {
                    B.push_back(v);
                    break;
                }
        }
        bool ok = true;
        for (int a : A)
            for (int b : B)
                if (!g.adj[a][b]) ok = false;
        if (!ok) continue;
        std::vector<int> T;
        for (int t = 0; t < n; t++)
            if ((mask >> t) & 1) T.push_back(t);
        out.push_back(std::move(T));
    }
    return out;
}

const char* connector_name(Connector c) {
    switch (c) {
        case Connector::H: return "H";
        case Connector::V: return "V";
        case Connector::X: return "X";
    }
    return "?";
}

Connector classify_connector(const Diagram& d, const std::vector<char>& inside) {
    auto tb = tangle_boundary(d, inside);
    if (!tb)
        throw Error(ErrorKind::NotATangle, "cut does not bound a 4-ended disk tangle");
    auto circ = d.circuit();
    int m = static_cast<int>(circ.size());
    EndRef entry{-1, -1};
    for (int i = 0; i < m; i++) {
        if (inside[circ[i].v] && !inside[circ[(i - 1 + m) % m].v]) {
            entry = circ[i];
            break;
        }
    }
    int start = -1;
    for (int i = 0; i < 4; i++)
        if (tb->stubs[i] == entry) start = i;
    if (start < 0)
        throw Error(ErrorKind::NotATangle, "circuit entry not on the tangle boundary");
    // Corners NW,NE,SE,SW around the boundary starting at the entry stub.
    int mate = (tb->strand_mate[start] - start + 4) % 4;
    return mate == 1 ? Connector::H : mate == 3 ? Connector::V : Connector::X;
}

bool tangle_correspondence_check(const Graph& g) {
    CondensedGraph ng = neighborhood_graph(g);
    std::vector<int> cls(g.size(), -1);
    for (int c = 0; c < ng.g.size(); c++)
        for (int v : ng.provenance[c]) cls[v] = c;

    std::set<std::vector<int>> want;
    for (auto& t : find_2tangles(ng.g)) want.insert(t);

    std::set<std::vector<int>> got;
    for (auto& t : find_2tangles(g)) {
        std::vector<int> in_count(ng.g.size(), 0);
        for (int v : t) in_count[cls[v]]++;
        bool whole = true;
        std::vector<int> image;
        for (int c = 0; c < ng.g.size(); c++) {
            if (in_count[c] == 0) continue;
            if (in_count[c] != static_cast<int>(ng.provenance[c].size())) whole = false;
            image.push_back(c);
        }
        if (whole && static_cast<int>(image.size()) < ng.g.size()) got.insert(image);
    }
    return want == got;
}

} // namespace knot
