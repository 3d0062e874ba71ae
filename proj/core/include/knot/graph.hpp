#pragma once

#include <string>
#include <vector>

namespace knot {

/// Small simple graph with optional vertex weights, edge signs and edge
/// directions. Everything here is desk scale (n <= 12 or so); adjacency is a
/// dense matrix.
struct Graph {
    std::vector<std::vector<signed char>> adj;  // 0/1, symmetric, zero diagonal
    std::vector<int> weight;                    // per vertex; 0 when unused
    std::vector<std::string> label;             // display name per vertex
    std::vector<std::vector<signed char>> esign;  // empty, or +1/-1 on edges
    std::vector<std::vector<signed char>> dir;    // empty, or dir[i][j]=1 for arc i->j

    static Graph make(int n);

    int size() const { return static_cast<int>(adj.size()); }
    bool edge(int i, int j) const { return adj[i][j] != 0; }
    void add_edge(int i, int j) { adj[i][j] = adj[j][i] = 1; }
    int edge_count() const;
    int degree(int v) const;

    /// Open neighborhood as a bitset-ish sorted list.
    std::vector<int> neighbors(int v) const;

    /// Edge complement; vertex weights negated (the duality convention used
    /// by the condensation tests).
    Graph complemented() const;
};

std::vector<int> connected_components(const Graph& g);  // component id per vertex
int component_count(const Graph& g);

/// Canonical encoding: identical strings iff the graphs are isomorphic
/// respecting weights, edge signs and edge directions. Exhaustive
/// permutation search with color-refinement pruning; fine for n <= 12.
std::string canonical_key(const Graph& g);

bool graphs_isomorphic(const Graph& a, const Graph& b);

} // namespace knot
