#pragma once

#include <cstddef>
#include <span>

#include "vgsec/degree_distribution.hpp"
#include "vgsec/parameters.hpp"

namespace vgsec {

/// E[1 / (alpha + gamma K)] where, given D = d, K ~ Binomial(d, x).
double expected_inverse_secure_rate(const Parameters& params, std::span<const double> pmf, double x);

/// h(x) = E[(beta + eta) / (alpha + gamma K)], the right-hand side of
/// 1/q - 1 = h(q). Throws DomainError when alpha <= 0 or x is outside [0, 1].
double h_value(const Parameters& params, const DegreeDistribution& dist, double x);
double h_value(const Parameters& params, std::span<const double> pmf, double x);

struct SolverOptions {
  double tol = 1e-10;   ///< bracket width and |residual| target
  double clamp = 1e-12; ///< search interval is [clamp, 1 - clamp]
  int max_iterations = 400;
};

struct FixedPointResult {
  double q = 0.0;
  double residual = 0.0; ///< |1/q - 1 - h(q)|
  int iterations = 0;
  double lower = 0.0; ///< alpha / (alpha + beta + eta)
  double upper = 0.0; ///< (alpha + gamma mu) / (alpha + beta + eta + gamma mu)

  double secure_probability() const noexcept { return 1.0 - q; }
};

/// Steady-state compromise probability: the unique root of
/// F(x) = 1/x - 1 - h(x) on (0, 1), found by bisection.
FixedPointResult solve_q(const Parameters& params, const DegreeDistribution& dist,
                         const SolverOptions& options = {});

struct QBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Distribution-free bounds on q; the upper one uses only the mean degree.
QBounds bounds(const Parameters& params, const DegreeDistribution& dist);
QBounds bounds_for_mean(const Parameters& params, double mean_degree);

struct CompromisedCount {
  double lo = 0.0;
  double hi = 0.0;
  double point = 0.0;
};

/// Bounds and point estimate of the steady-state number of compromised nodes.
CompromisedCount expected_compromised(const Parameters& params, const DegreeDistribution& dist,
                                      std::size_t n);

/// E[K] = q * mu.
double mean_compromised_neighbors(const DegreeDistribution& dist, double q);

} // namespace vgsec
