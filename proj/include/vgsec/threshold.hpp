#pragma once

#include <cstddef>

#include "vgsec/degree_distribution.hpp"
#include "vgsec/parameters.hpp"

namespace vgsec {

/// Conditions for Pr[C_t <= c n] >= 1 - eps in steady state.
struct ThresholdVerdict {
  bool sufficient_holds = false;       ///< upper <= c^2 n / (n + z^2)
  bool sufficient_sharp_holds = false; ///< upper <= lambda
  bool necessary_holds = false;        ///< lower <= c^2 n / (n + z^2)
  double lambda = 0.0;                 ///< smaller root of the quadratic in q
  double z = 0.0;
  double rhs = 0.0; ///< c^2 n / (n + z^2)
  double lower = 0.0;
  double upper = 0.0;
};

/// c^2 n / (n + z^2).
double threshold_rhs(double c, std::size_t n, double z);

/// Smaller root of q^2 (n + z^2) - q (2cn + z^2) + c^2 n.
double threshold_lambda(double c, std::size_t n, double z);

/// Requires 0 < c < 1, 0 < eps < 1, n >= 1.
ThresholdVerdict threshold_check(const Parameters& params, const DegreeDistribution& dist,
                                 std::size_t n, double c, double eps);

/// Same verdict for an explicitly given quantile z.
ThresholdVerdict threshold_check_with_z(const Parameters& params, const DegreeDistribution& dist,
                                        std::size_t n, double c, double z);

} // namespace vgsec
