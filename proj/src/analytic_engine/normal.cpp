#include "vgsec/normal.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "vgsec/errors.hpp"

namespace vgsec {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

namespace {

// Acklam's rational approximation of the inverse standard normal CDF
// (relative error below 1.2e-9 before refinement).
constexpr std::array<double, 6> kA{-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
constexpr std::array<double, 5> kB{-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
constexpr std::array<double, 6> kC{-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
constexpr std::array<double, 4> kD{7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
constexpr double kLowRegion = 0.02425;

// Lower-tail quantile: Phi^{-1}(p) for p in (0, 0.5].
double lower_quantile(double p) {
  if (p < kLowRegion) {
    const double t = std::sqrt(-2.0 * std::log(p));
    return (((((kC[0] * t + kC[1]) * t + kC[2]) * t + kC[3]) * t + kC[4]) * t + kC[5]) /
           ((((kD[0] * t + kD[1]) * t + kD[2]) * t + kD[3]) * t + 1.0);
  }
  const double t = p - 0.5;
  const double r = t * t;
  return (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * t /
         (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
}

} // namespace

double normal_quantile(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("quantile level must lie in (0, 1)");
  if (eps == 0.5) return 0.0;
  // z(eps) = -Phi^{-1}(eps); work in whichever tail is smaller.
  const bool upper = eps < 0.5;
  const double p = upper ? eps : 1.0 - eps;
  double x = lower_quantile(p);
  // One Halley step against erfc tightens the approximation to near machine precision.
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return upper ? -x : x;
}

} // namespace vgsec
