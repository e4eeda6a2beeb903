#include "vgsec/threshold.hpp"

#include <cmath>

#include "vgsec/errors.hpp"
#include "vgsec/fixed_point.hpp"
#include "vgsec/normal.hpp"

namespace vgsec {

double threshold_rhs(double c, std::size_t n, double z) {
  const double nd = static_cast<double>(n);
  return c * c * nd / (nd + z * z);
}

double threshold_lambda(double c, std::size_t n, double z) {
  const double nd = static_cast<double>(n);
  const double z2 = z * z;
  return (2.0 * c * nd + z2 - std::sqrt(z2 * z2 + 4.0 * c * nd * (1.0 - c) * z2)) /
         (2.0 * (nd + z2));
}

ThresholdVerdict threshold_check_with_z(const Parameters& params, const DegreeDistribution& dist,
                                        std::size_t n, double c, double z) {
  if (!(c > 0.0 && c < 1.0)) throw DomainError("threshold fraction c must lie in (0, 1)");
  if (n == 0) throw DomainError("threshold check needs n >= 1");
  const auto b = bounds(params, dist);
  ThresholdVerdict v;
  v.z = z;
  v.lower = b.lower;
  v.upper = b.upper;
  v.rhs = threshold_rhs(c, n, z);
  v.lambda = threshold_lambda(c, n, z);
  v.sufficient_holds = b.upper <= v.rhs;
  v.sufficient_sharp_holds = b.upper <= v.lambda;
  v.necessary_holds = b.lower <= v.rhs;
  return v;
}

ThresholdVerdict threshold_check(const Parameters& params, const DegreeDistribution& dist,
                                 std::size_t n, double c, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  return threshold_check_with_z(params, dist, n, c, normal_quantile(eps));
}

} // namespace vgsec
