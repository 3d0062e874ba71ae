#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knot/errors.hpp"

namespace knot {

enum class Strand : unsigned char { Over, Under };

/// Cyclic double-occurrence word over crossing labels, optionally decorated
/// with over/under flags (per position) and signs (per label).
///
/// Labels are normalized to first-occurrence order 0..n-1 on construction;
/// the original spellings are kept for display.
class GaussCode {
public:
    GaussCode() = default;
    GaussCode(std::vector<int> letters,
              std::optional<std::vector<Strand>> ou,
              std::optional<std::vector<int>> sign);

    /// Parses one line of the whitespace-separated token grammar.
    /// Token kinds: "7", "O7"/"U7", "O7+"/"U7-"; a line uses one kind only.
    static GaussCode parse(std::string_view text);

    int crossings() const { return static_cast<int>(letters_.size() / 2); }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    const std::vector<int>& letters() const { return letters_; }
    bool has_ou() const { return ou_.has_value(); }
    bool has_sign() const { return sign_.has_value(); }
    const std::vector<Strand>& ou() const { return *ou_; }
    const std::vector<int>& sign() const { return *sign_; }

    /// The two positions of a label, in word order.
    std::pair<int, int> occurrences(int label) const;

    /// Cyclic gap between the two occurrences of `label` (shorter side not
    /// taken; this is simply second minus first).
    int gap(int label) const;

    /// True when every label's occurrence gap is odd (necessary for
    /// realizability on the sphere).
    bool all_gaps_odd() const;

    /// True when no label occurs at two cyclically adjacent positions.
    bool reduced() const;

    std::string to_string() const;

    bool operator==(const GaussCode& other) const;

private:
    std::vector<int> letters_;                 // 2n entries, labels 0..n-1
    std::optional<std::vector<Strand>> ou_;    // per position
    std::optional<std::vector<int>> sign_;     // per label, +1 / -1
    std::vector<std::string> display_;         // original spelling per label

    friend GaussCode canonicalize(const GaussCode&);
    friend GaussCode reverse(const GaussCode&);
};

/// Lexicographically least representative over all rotations, both traversal
/// directions, and first-occurrence relabelings. Token order: letter id, then
/// Over < Under, then + < -.
GaussCode canonicalize(const GaussCode& code);

/// Swaps every OU flag and negates every sign. Errors on undecorated codes.
GaussCode mirror(const GaussCode& code);

/// Reverses the traversal direction. OU flags travel with their positions;
/// signs are unchanged (local writhe is orientation-independent).
GaussCode reverse(const GaussCode& code);

/// Assigns OU flags alternately starting Over at position 0. Errors with
/// OddGap when some label has an even occurrence gap.
GaussCode assign_alternating(const GaussCode& code);

} // namespace knot
