#pragma once

#include <vector>

#include "knot/chord_diagram.hpp"
#include "knot/embedding.hpp"
#include "knot/graph.hpp"

namespace knot {

/// Result of repeated twin contraction. `provenance[v]` lists the original
/// vertices absorbed into condensed vertex v. Weight bookkeeping: a vertex
/// of weight w > 0 absorbed a clique of w+1 originals, w < 0 an anticlique
/// of |w|+1, w = 0 a single vertex.
struct CondensedGraph {
    Graph g;
    std::vector<std::vector<int>> provenance;
};

/// Contract until irreducible: merge adjacent vertices with equal closed
/// neighborhoods and weights >= 0 (weight = sum + 1), or non-adjacent
/// vertices with equal open neighborhoods and weights <= 0 (weight =
/// sum - 1). Lowest-indexed eligible pair first.
CondensedGraph neighborhood_graph(const Graph& g);

/// Chord diagram with torsads packed into weighted chords: maximal runs of
/// mutually crossing consecutive chords get +(n-1), mutually parallel
/// consecutive chords get -(n-1), singletons 0.
struct CondensedCD {
    ChordDiagram cd;
    std::vector<int> weight;                // per condensed chord
    std::vector<std::vector<int>> members;  // original chord ids per condensed chord
};

CondensedCD condense_chord_diagram(const ChordDiagram& cd);

/// All vertex subsets T (1 <= |T| < |V|) whose edges to the outside form a
/// complete bipartite graph.
std::vector<std::vector<int>> find_2tangles(const Graph& g);

enum class Connector { H, V, X };
const char* connector_name(Connector c);

/// Strand pairing of a diagram tangle as seen from outside. Boundary ends
/// are labeled NW, NE, SE, SW starting from the first circuit entry, going
/// around the boundary; the transit pairing then names the connector.
Connector classify_connector(const Diagram& d, const std::vector<char>& inside);

/// Checks the tangle/condensation correspondence: the 2-tangles of the
/// condensed graph are exactly the images of those 2-tangles of g that are
/// unions of provenance classes.
bool tangle_correspondence_check(const Graph& g);

} // namespace knot
