#pragma once

namespace vgsec {

/// Standard normal CDF.
double normal_cdf(double x);

/// The 1 - eps quantile of the standard normal, eps in (0, 1).
double normal_quantile(double eps);

} // namespace vgsec
