#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "vgsec/degree_distribution.hpp"

namespace vgsec {

/// Relation of the first distribution to the second under the usual
/// stochastic order (survival functions compared pointwise).
enum class Relation { LE, GE, EQ, Incomparable };

/// How a verdict was reached.
enum class OrderBasis { Tabulated, SameFamilyRule, CrossFamilyRule };

struct OrderVerdict {
  Relation relation = Relation::Incomparable;
  /// For Incomparable: smallest degree at which both orientations have been violated.
  std::optional<std::size_t> witness;
  OrderBasis basis = OrderBasis::Tabulated;
  /// Cross-family only: the closed-form window held but tabulation disagreed.
  bool rule_overridden = false;
};

inline constexpr double kParametricOrderTolerance = 1e-12;

Relation flip(Relation r) noexcept;
std::string_view to_string(Relation r) noexcept;
std::string_view to_string(OrderBasis b) noexcept;

/// Tabulates both survival functions over a common support.
OrderVerdict stochastic_order(const DegreeDistribution& first, const DegreeDistribution& second,
                              double tol = kParametricOrderTolerance);

/// Closed-form comparison of two parametric distributions of the same family.
/// Throws InputError on kind mismatch or empirical inputs.
OrderVerdict order_same_family(const DegreeDistribution& first, const DegreeDistribution& second);

/// Closed-form comparison of (Regular|Random) against PowerLaw, either order.
/// `n` is the node count used in the random-graph window. Outside the
/// closed-form windows the verdict is tabulated. Throws InputError on any
/// other kind pair.
OrderVerdict order_cross_family(const DegreeDistribution& first, const DegreeDistribution& second,
                                std::size_t n);

/// Lower and upper edge probability of the random-vs-power-law window.
struct EdgeProbWindow {
  double lower;
  double upper;
  bool contains(double r) const noexcept { return lower <= r && r <= upper; }
};
EdgeProbWindow random_power_law_window(std::size_t min_degree, double exponent, std::size_t n);

} // namespace vgsec
