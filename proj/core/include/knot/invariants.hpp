#pragma once

#include <string>
#include <vector>

#include "knot/embedding.hpp"
#include "knot/flype.hpp"
#include "knot/graph.hpp"

namespace knot {

/// True iff the two diagrams present the same knot (equal flype orbits).
bool same_knot(const SignedDiagram& a, const SignedDiagram& b);

struct ChiralityProfile {
    bool achiral_plus = false;   // sign flip undone by a rotation
    bool achiral_minus = false;  // sign flip undone by a reflection
    bool invertible = false;     // fixed by a reflection alone
    std::string verdict() const {
        if (achiral_plus && achiral_minus) return "fully symmetric";
        if (achiral_plus) return "achiral+";
        if (achiral_minus) return "achiral-";
        return "chiral";
    }
    bool achiral() const { return achiral_plus || achiral_minus; }
};

ChiralityProfile chirality_profile(const SignedDiagram& sd);

/// Stabilizer of the weighted chord diagram inside the dihedral group.
struct SymmetryGroup {
    int order = 1;
    std::vector<std::string> generators;  // "rot k" / "refl k"
};

SymmetryGroup symmetry_group(const SignedDiagram& sd);

/// Interlacement graph with optional vertex signs (local writhe) and edge
/// directions: a -> b when walking the circle from a's tail meets b's tail
/// before a's head.
Graph build_enhanced_lg(const SignedDiagram& sd, bool with_eps, bool with_alpha);

enum class TangleSym { Id, H, V, Pi };
const char* tangle_sym_name(TangleSym s);

/// Applies one symmetry to the 2-tangle given by its crossing set. H flips
/// across the band axis, V across the transverse axis, Pi rotates in plane;
/// H and V mirror the tangle's embedding and swap over/under inside.
SignedDiagram mutate(const SignedDiagram& sd, const std::vector<char>& inside, TangleSym sym);

/// Reorders disjoint tangles arranged in series along a two-strand band.
/// `perm[i] = j` puts tangle j at position i.
SignedDiagram permute_tangles(const SignedDiagram& sd, const std::vector<std::vector<char>>& cuts,
                              const std::vector<int>& perm);

} // namespace knot
