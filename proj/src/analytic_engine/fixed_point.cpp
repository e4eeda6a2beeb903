#include "vgsec/fixed_point.hpp"

#include <cmath>
#include <string>

#include "vgsec/errors.hpp"

namespace vgsec {

void Parameters::validate_rates() const {
  for (double r : {alpha, beta, gamma, eta})
    if (!std::isfinite(r) || r < 0.0)
      throw InputError("rates must be finite and non-negative");
}

void Parameters::validate_for_solver() const {
  validate_rates();
  if (!(alpha > 0.0)) throw DomainError("alpha must be > 0 for the steady-state equation");
  if (!(recovery_rate() > 0.0)) throw DomainError("beta + eta must be > 0");
}

namespace {

// Terms below this fraction of the modal weight do not change a double sum.
constexpr double kNegligibleWeight = 1e-18;

// E[1 / (alpha + gamma K)] for K ~ Binomial(d, x), summed outward from the mode.
double conditional_inverse_rate(std::size_t d, double x, double alpha, double gamma) {
  if (d == 0 || x <= 0.0) return 1.0 / alpha;
  const double nd = static_cast<double>(d);
  if (x >= 1.0) return 1.0 / (alpha + gamma * nd);

  const double odds = x / (1.0 - x);
  auto mode = static_cast<std::size_t>(std::floor((nd + 1.0) * x));
  if (mode > d) mode = d;

  double weight_sum = 1.0;
  double value_sum = 1.0 / (alpha + gamma * static_cast<double>(mode));
  double w = 1.0;
  for (std::size_t k = mode + 1; k <= d; ++k) {
    const double kd = static_cast<double>(k);
    w *= (nd - kd + 1.0) / kd * odds;
    if (w < kNegligibleWeight) break;
    weight_sum += w;
    value_sum += w / (alpha + gamma * kd);
  }
  w = 1.0;
  for (std::size_t k = mode; k-- > 0;) {
    const double kd = static_cast<double>(k);
    w *= (kd + 1.0) / (nd - kd) / odds;
    if (w < kNegligibleWeight) break;
    weight_sum += w;
    value_sum += w / (alpha + gamma * kd);
  }
  return value_sum / weight_sum;
}

void check_h_domain(const Parameters& params, double x) {
  if (!(params.alpha > 0.0)) throw DomainError("h is undefined for alpha <= 0");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("h argument must lie in [0, 1]");
}

} // namespace

double expected_inverse_secure_rate(const Parameters& params, std::span<const double> pmf, double x) {
  check_h_domain(params, x);
  double total = 0.0;
  for (std::size_t d = 0; d < pmf.size(); ++d) {
    if (pmf[d] == 0.0) continue;
    total += pmf[d] * conditional_inverse_rate(d, x, params.alpha, params.gamma);
  }
  return total;
}

double h_value(const Parameters& params, std::span<const double> pmf, double x) {
  return params.recovery_rate() * expected_inverse_secure_rate(params, pmf, x);
}

double h_value(const Parameters& params, const DegreeDistribution& dist, double x) {
  return h_value(params, dist.pmf(), x);
}

QBounds bounds_for_mean(const Parameters& params, double mean_degree) {
  params.validate_rates();
  const double rec = params.recovery_rate();
  if (!(rec > 0.0)) throw DomainError("beta + eta must be > 0");
  const double spread = params.gamma * mean_degree;
  return {params.alpha / (params.alpha + rec), (params.alpha + spread) / (params.alpha + rec + spread)};
}

QBounds bounds(const Parameters& params, const DegreeDistribution& dist) {
  return bounds_for_mean(params, dist.mean());
}

FixedPointResult solve_q(const Parameters& params, const DegreeDistribution& dist,
                         const SolverOptions& options) {
  params.validate_for_solver();
  if (!(options.tol > 0.0)) throw InputError("solver tolerance must be > 0");
  if (!(options.clamp > 0.0 && options.clamp < 0.5)) throw InputError("solver clamp must be in (0, 0.5)");

  const auto pmf = dist.pmf();
  auto residual_at = [&](double x) {
    const double f = 1.0 / x - 1.0 - h_value(params, pmf, x);
    if (!std::isfinite(f)) throw DomainError("non-finite residual at x = " + std::to_string(x));
    return f;
  };

  double lo = options.clamp;
  double hi = 1.0 - options.clamp;
  if (!(residual_at(lo) > 0.0) || !(residual_at(hi) < 0.0))
    throw DomainError("steady-state equation is not bracketed on [clamp, 1 - clamp]");

  FixedPointResult out;
  double mid = 0.5 * (lo + hi);
  double f_mid = residual_at(mid);
  for (out.iterations = 1; out.iterations < options.max_iterations; ++out.iterations) {
    if (f_mid == 0.0) break;
    (f_mid > 0.0 ? lo : hi) = mid;
    const double next = 0.5 * (lo + hi);
    if (next == lo || next == hi) break; // bracket exhausted at double precision
    mid = next;
    f_mid = residual_at(mid);
    if (hi - lo <= options.tol && std::abs(f_mid) <= options.tol) break;
  }
  out.q = mid;
  out.residual = std::abs(f_mid);
  const auto b = bounds(params, dist);
  out.lower = b.lower;
  out.upper = b.upper;
  return out;
}

CompromisedCount expected_compromised(const Parameters& params, const DegreeDistribution& dist,
                                      std::size_t n) {
  if (n == 0) return {};
  const auto solved = solve_q(params, dist);
  const double nd = static_cast<double>(n);
  return {nd * solved.lower, nd * solved.upper, nd * solved.q};
}

double mean_compromised_neighbors(const DegreeDistribution& dist, double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("q must lie in [0, 1]");
  return q * dist.mean();
}

} // namespace vgsec
