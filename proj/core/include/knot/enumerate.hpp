#pragma once

#include <vector>

#include "knot/embedding.hpp"
#include "knot/gauss_code.hpp"

namespace knot {

/// One representative per class of double-occurrence words with n letters,
/// up to rotation, reversal and relabeling.
std::vector<GaussCode> all_words(int n);

/// The realizable, reduced words with connected interlacement graph: the
/// shadows of reduced prime knot diagrams.
std::vector<GaussCode> prime_shadows(int n);

/// Knots with n-crossing reduced alternating diagrams: shadows grouped so
/// that two signed alternating diagrams land together exactly when they are
/// flype-related or mirror images.
struct KnotClass {
    SignedDiagram rep;
    std::vector<std::string> orbit_keys;
    std::vector<std::string> mirror_orbit_keys;
};

std::vector<KnotClass> knot_classes(int n);

/// Shadow of the rational knot with Conway digits a1 a2 ... ak: a1 twists,
/// then alternately stacked vertical/horizontal twist runs, numerator
/// closure. All digits >= 1.
GaussCode rational_shadow(const std::vector<int>& digits);

/// Shadow of the numerator closure of a left-to-right sum of rational
/// tangles (Conway "a,b,c").
GaussCode sum_shadow(const std::vector<std::vector<int>>& tangles);

/// Same, also reporting which code labels each summand contributed.
struct TangleSumShadow {
    GaussCode shadow;
    std::vector<std::vector<char>> cuts;  // per summand, mask over labels
};

TangleSumShadow sum_shadow_with_cuts(const std::vector<std::vector<int>>& tangles);

} // namespace knot
