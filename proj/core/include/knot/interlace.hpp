#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knot/chord_diagram.hpp"
#include "knot/gauss_code.hpp"
#include "knot/graph.hpp"

namespace knot {

/// Interlacement graph: one vertex per chord, edge when the chords cross.
/// Vertex weights carry chord signs when the source has them.
Graph build_interlacement(const ChordDiagram& cd);
Graph build_interlacement(const GaussCode& code);

/// True iff `f` is exactly the edge set across some vertex bipartition.
/// Parity-constrained 2-coloring: f-edges change color, others keep it.
bool is_cocycle(const Graph& g, const std::vector<std::pair<int, int>>& f);

/// Sphere-realizability test on the interlacement graph. Three conditions,
/// checked in order, first failure reported with a witness:
///   (i)  every open neighborhood has even size;
///   (ii) every non-adjacent pair has an even common neighborhood;
///   (iii) the edges with even common neighborhoods form a cocycle.
struct RealizabilityVerdict {
    int failed_condition = 0;  // 0 = realizable, else 1/2/3
    std::string witness;
    bool realizable() const { return failed_condition == 0; }
};

RealizabilityVerdict check_realizability(const GaussCode& code);

/// Number of distinct spherical curves with this crossing sequence:
/// 2^(r-1) for r interlacement components. Errors when not realizable.
long long count_realizations(const GaussCode& code);

} // namespace knot
