#include "vgsec/degree_distribution.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "vgsec/errors.hpp"
#include "vgsec/graph.hpp"

namespace vgsec {

namespace {

void normalize(std::vector<double>& pmf) {
  const double total = std::accumulate(pmf.begin(), pmf.end(), 0.0);
  for (double& p : pmf) p /= total;
}

} // namespace

std::vector<double> binomial_pmf(std::size_t trials, double p) {
  std::vector<double> pmf(trials + 1, 0.0);
  if (p <= 0.0) {
    pmf.front() = 1.0;
    return pmf;
  }
  if (p >= 1.0) {
    pmf.back() = 1.0;
    return pmf;
  }
  const double odds = p / (1.0 - p);
  const double nt = static_cast<double>(trials);
  auto mode = static_cast<std::size_t>(std::floor((nt + 1.0) * p));
  if (mode > trials) mode = trials;

  pmf[mode] = 1.0;
  for (std::size_t k = mode + 1; k <= trials; ++k) {
    pmf[k] = pmf[k - 1] * (nt - static_cast<double>(k) + 1.0) / static_cast<double>(k) * odds;
    if (pmf[k] == 0.0) break;
  }
  for (std::size_t k = mode; k-- > 0;) {
    pmf[k] = pmf[k + 1] * static_cast<double>(k + 1) / (nt - static_cast<double>(k)) / odds;
    if (pmf[k] == 0.0) break;
  }
  normalize(pmf);
  return pmf;
}

DegreeDistribution::DegreeDistribution(Kind kind, std::vector<double> pmf)
    : kind_(std::move(kind)), pmf_(std::move(pmf)) {
  normalize(pmf_);
  for (std::size_t d = 0; d < pmf_.size(); ++d) mean_ += static_cast<double>(d) * pmf_[d];
}

DegreeDistribution DegreeDistribution::regular(std::size_t degree) {
  std::vector<double> pmf(degree + 1, 0.0);
  pmf[degree] = 1.0;
  return DegreeDistribution(RegularSpec{degree}, std::move(pmf));
}

DegreeDistribution DegreeDistribution::random(std::size_t n, double edge_prob) {
  if (n == 0) throw InputError("random distribution needs n >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw InputError("edge probability must lie in [0, 1]");
  return DegreeDistribution(RandomSpec{n, edge_prob}, binomial_pmf(n - 1, edge_prob));
}

DegreeDistribution DegreeDistribution::power_law(std::size_t min_degree, double exponent,
                                                 std::size_t n) {
  if (min_degree < 1) throw InputError("power-law min degree must be >= 1");
  if (!(exponent >= 1.0) || !std::isfinite(exponent))
    throw InputError("power-law exponent must be finite and >= 1");
  if (n < 2 || min_degree > n - 1) throw InputError("power-law min degree must be <= n - 1");
  std::vector<double> pmf(n, 0.0);
  for (std::size_t d = min_degree; d < n; ++d)
    pmf[d] = std::pow(static_cast<double>(d), -(exponent + 1.0));
  return DegreeDistribution(PowerLawSpec{min_degree, exponent, n}, std::move(pmf));
}

DegreeDistribution DegreeDistribution::empirical(std::vector<double> pmf) {
  if (pmf.empty()) throw InputError("empirical pmf must not be empty");
  double total = 0.0;
  for (double p : pmf) {
    if (!std::isfinite(p) || p < 0.0) throw InputError("empirical pmf entries must be >= 0");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-6)
    throw InputError("empirical pmf sums to " + std::to_string(total) + ", expected 1");
  auto copy = pmf;
  normalize(copy);
  return DegreeDistribution(EmpiricalSpec{std::move(copy)}, std::move(pmf));
}

std::string_view DegreeDistribution::kind_name() const noexcept {
  switch (kind_.index()) {
  case 0: return "regular";
  case 1: return "random";
  case 2: return "powerlaw";
  default: return "empirical";
  }
}

std::vector<double> DegreeDistribution::survival(std::size_t len) const {
  std::vector<double> out(len, 0.0);
  // Pr[D > d] = sum_{k > d} pmf(k); summing from the top keeps tiny tails exact.
  double tail = 0.0;
  for (std::size_t k = pmf_.size(); k-- > 0;) {
    if (k < len) out[k] = tail;
    tail += pmf_[k];
  }
  return out;
}

DegreeDistribution empirical_distribution(const VulnerabilityGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<double> counts(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) counts[graph.degree(static_cast<NodeId>(v))] += 1.0;
  for (double& c : counts) c /= static_cast<double>(n);
  return DegreeDistribution::empirical(std::move(counts));
}

} // namespace vgsec
