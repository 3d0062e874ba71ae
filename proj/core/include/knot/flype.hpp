#pragma once

#include <array>
#include <map>
#include <tuple>
#include <set>
#include <string>
#include <vector>

#include "knot/embedding.hpp"

namespace knot {

/// One possible flype move: crossing c travels across the tangle T. The two
/// passive gaps are the boundary edges of T not touching c; c's letters are
/// reinserted there.
struct FlypeOpportunity {
    int c = -1;
    std::vector<int> tangle;            // crossing ids, sorted
    std::array<int, 4> cut_gaps{};      // circuit gap indices of T's boundary edges
    std::array<int, 2> active_gaps{};   // the two incident to c
    std::array<int, 2> passive_gaps{};  // the other two
    std::string type;                   // advisory: "I" or "II"
};

/// Orbit of a diagram under nontrivial flypes, with the move graph.
struct FlypeOrbit {
    std::vector<SignedDiagram> members;
    std::vector<std::vector<int>> words;  // letter sequence per member, surgery-aligned
    std::vector<std::string> keys;        // canonical code per member
    struct Move {
        int from, to, crossing;
    };
    std::vector<Move> moves;
    std::set<int> moving_labels;
};

/// Band cycle of flype opportunities: p active crossings spread over q
/// interval positions, all sharing one sign.
struct FlypeCycle {
    std::vector<int> members;  // crossing ids
    int p = 0, q = 0;
    int sign = 0;
};

/// Chord diagram whose chords carry signed rational weights. Skeleton slots
/// come from the never-moving crossings; each flype cycle contributes one
/// chord of weight sign*p/q at each of its q gap positions. Gap g sits
/// right before skeleton slot g.
struct WeightedChordDiagram {
    int slots = 0;
    std::vector<int> skel_partner;          // slot involution
    std::vector<int> skel_num, skel_den;    // weight per slot (both endpoints equal)
    struct GapChord {
        int g1, g2;  // gap positions, g1 <= g2
        int num, den;
        bool operator<(const GapChord& o) const {
            return std::tie(g1, g2, num, den) < std::tie(o.g1, o.g2, o.num, o.den);
        }
        bool operator==(const GapChord& o) const = default;
    };
    std::vector<GapChord> gap_chords;  // sorted
};

void require_knot(const SignedDiagram& sd);  // NotReduced / NotAlternating

std::vector<FlypeOpportunity> find_flype_opportunities(const SignedDiagram& sd);

SignedDiagram apply_flype(const SignedDiagram& sd, const FlypeOpportunity& of);

FlypeOrbit enumerate_orbit(const SignedDiagram& sd);

std::vector<FlypeCycle> find_flype_cycles(const SignedDiagram& sd);

WeightedChordDiagram build_cwcd(const SignedDiagram& sd);

/// Sign-flipped copy (the mirror knot's weighted diagram).
WeightedChordDiagram flip_signs(const WeightedChordDiagram& w);

/// Image under the dihedral element: rotation by k skeleton slots, after an
/// optional reflection.
WeightedChordDiagram transform_cwcd(const WeightedChordDiagram& w, int k, bool reflect);

/// Deterministic encoding of the object as laid out (no symmetry reduction).
std::string cwcd_encode(const WeightedChordDiagram& w);

/// Minimum encoding over the dihedral group: equal strings iff the weighted
/// diagrams agree up to rotation/reflection.
std::string cwcd_canonical(const WeightedChordDiagram& w);

} // namespace knot
