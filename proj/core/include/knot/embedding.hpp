#pragma once

#include <array>
#include <optional>
#include <vector>

#include "knot/chord_diagram.hpp"
#include "knot/gauss_code.hpp"

namespace knot {

/// One of the four edge ends around a crossing. Slots 0..3 are in rotation
/// order; the transversal strand through slot s leaves at slot s+2.
struct EndRef {
    int v = -1;
    int s = -1;
    bool operator==(const EndRef&) const = default;
};

/// Per-crossing sign data computed from an embedding.
struct SignData {
    std::vector<int> epsilon;    // local writhe per crossing
    std::vector<int> path_sign;  // sign of the first passage's crossing path
    int writhe = 0;
};

/// 4-regular spherical diagram: a rotation system whose transversal Euler
/// circuit is the knot. Crossing ids are stable under the surgery
/// operations, which is what lets orbits track labels.
class Diagram {
public:
    Diagram() = default;
    Diagram(std::vector<std::array<EndRef, 4>> att, std::vector<unsigned char> over);

    int crossings() const { return static_cast<int>(att_.size()); }
    const EndRef& att(int v, int s) const { return att_[v][s]; }
    std::vector<std::array<EndRef, 4>>& mutable_att() { return att_; }
    std::vector<unsigned char>& mutable_over() { return over_; }

    bool has_ou() const { return !over_.empty(); }
    /// Which slot-pair class ({0,2} for 0, {1,3} for 1) carries the over strand.
    unsigned char over_pair(int v) const { return over_[v]; }

    /// Number of faces by face tracing; n + 2 exactly when spherical.
    int face_count() const;
    bool spherical() const { return face_count() == crossings() + 2; }

    /// Arrival ends of the transversal Euler circuit, starting from a fixed
    /// deterministic dart. Length 2n; empty when the circuit splits (which
    /// cannot happen for a valid diagram but is checked by surgery).
    std::vector<EndRef> circuit() const;
    std::vector<EndRef> circuit_from(EndRef first_arrival, bool forward) const;

    /// Crossing id sequence along the circuit.
    std::vector<int> word() const;

    /// Reads the (optionally signed) Gauss code off the circuit, labels in
    /// first-occurrence order. Includes OU when present and epsilon when
    /// `eps` is non-empty.
    GaussCode read_code(const std::vector<int>& eps = {}) const;

    /// Reflection of the sphere: all rotations reversed. OU kept, so every
    /// computed epsilon flips.
    Diagram reflected() const;

    bool reduced() const;

private:
    std::vector<std::array<EndRef, 4>> att_;   // att_[v][s] = opposite end
    std::vector<unsigned char> over_;          // empty when no OU decoration
};

/// Exhaustive rotation-system search: 2 transversal choices per crossing,
/// first spherical hit in branch order wins. Crossings are indexed by first
/// occurrence in the code.
std::optional<Diagram> build_embedding(const GaussCode& code);

/// Epsilon, crossing-path signs and writhe, under the fixed global rotation
/// convention. Throws MissingOU for undecorated diagrams.
SignData compute_signs(const Diagram& d);

/// Finds the embedding reproducing the given sign vector exactly (reflecting
/// if needed). Throws NotRealizable or SignMismatch.
Diagram validate_signed_code(const GaussCode& code);

/// Chord diagram of the circuit with path-sign arrows (tail on the positive
/// path end) and epsilon chord signs.
ChordDiagram diagram_to_cd(const Diagram& d, const std::vector<int>& eps);

/// Diagram together with its pinned per-crossing signs: compute_signs(d)
/// reproduces eps exactly. This is the working representation of one
/// concrete knot diagram (as opposed to its mirror).
struct SignedDiagram {
    Diagram d;
    std::vector<int> eps;

    GaussCode code() const { return d.read_code(eps); }
};

/// Builds the pinned representation from any code: signed OU codes pick the
/// matching embedding; OU codes pin to the first embedding found; plain
/// codes get alternating OU first.
SignedDiagram make_signed(const GaussCode& code);

/// Same shadow, over/under swapped, signs negated.
SignedDiagram mirror_diagram(const SignedDiagram& sd);

/// Canonical code string; equal for equal diagrams regardless of labeling.
std::string diagram_key(const SignedDiagram& sd);

/// A 2-tangle cut: subset of crossings forming a disk region crossed by
/// exactly four edges. `stubs` are the inside ends of those edges in cyclic
/// boundary order; `strand_mate[i] = j` when stubs i and j are joined by a
/// strand running through the inside.
struct TangleBoundary {
    std::array<EndRef, 4> stubs;
    std::array<int, 4> strand_mate;
};

/// Boundary walk of the sub-map induced by `inside`. Returns std::nullopt
/// when the region is not a disk with exactly four boundary ends.
std::optional<TangleBoundary> tangle_boundary(const Diagram& d, const std::vector<char>& inside);

/// Face id per dart (index v*4+s), faces numbered in discovery order.
std::vector<int> face_ids(const Diagram& d);

/// Knot determinant: spanning-tree count of the checkerboard graph (valid
/// for alternating diagrams).
long long determinant(const Diagram& d);

} // namespace knot
