#pragma once

#include <optional>
#include <vector>

#include "knot/gauss_code.hpp"

namespace knot {

/// Circle of 2n slots with a fixed-point-free pairing (one chord per label).
/// Chords optionally carry a sign and an arrow (slot index of the tail).
class ChordDiagram {
public:
    ChordDiagram() = default;
    explicit ChordDiagram(std::vector<int> pairing);

    int size() const { return static_cast<int>(pairing_.size() / 2); }
    int slots() const { return static_cast<int>(pairing_.size()); }

    int partner(int slot) const { return pairing_[slot]; }
    const std::vector<int>& pairing() const { return pairing_; }

    /// Chord index per slot, numbered by first endpoint.
    const std::vector<int>& chord_of() const { return chord_of_; }

    bool has_sign() const { return !chord_sign_.empty(); }
    bool has_arrow() const { return !arrow_tail_.empty(); }
    const std::vector<int>& chord_sign() const { return chord_sign_; }
    /// Tail slot per chord (arrow points tail -> head).
    const std::vector<int>& arrow_tail() const { return arrow_tail_; }

    void set_sign(std::vector<int> sign) { chord_sign_ = std::move(sign); }
    void set_arrow(std::vector<int> tail) { arrow_tail_ = std::move(tail); }

private:
    std::vector<int> pairing_;
    std::vector<int> chord_of_;
    std::vector<int> chord_sign_;   // per chord, +1/-1; empty when absent
    std::vector<int> arrow_tail_;   // per chord, a slot; empty when absent
};

/// Same pairing re-indexed so that `cut` becomes slot 0.
struct LinearChordDiagram {
    ChordDiagram cd;
    int cut = 0;
};

/// Slot i pairs slot j iff letters i and j are equal. Signs are copied from
/// the code; arrows get their tail on the Over slot when OU is present.
ChordDiagram build_chord_diagram(const GaussCode& code);

/// True iff exactly one endpoint of b lies strictly between the endpoints
/// of a, walking the circle.
bool chords_interlaced(const ChordDiagram& cd, int chord_a, int chord_b);

LinearChordDiagram to_linear(const ChordDiagram& cd, int cut);

} // namespace knot
