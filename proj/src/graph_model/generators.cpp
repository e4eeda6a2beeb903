#include "vgsec/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "vgsec/degree_distribution.hpp"
#include "vgsec/errors.hpp"

namespace vgsec {

namespace {

constexpr std::size_t kPartnerTries = 64;
constexpr double kMaxDroppedStubFraction = 0.05;

std::uint64_t edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct Pairing {
  std::vector<VulnerabilityGraph::Edge> edges;
  std::size_t dropped = 0;
  bool complete = true;
};

// Pops a stub and pairs it with a uniformly drawn remaining stub, redrawing on
// self-loops or repeated edges. When random redraws fail, the remaining stubs
// are scanned for any legal partner; a stub with none is a dead end.
Pairing pair_stubs(const std::vector<std::size_t>& degrees, Rng& rng, bool allow_drop) {
  std::vector<NodeId> stubs;
  stubs.reserve(std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}));
  for (std::size_t v = 0; v < degrees.size(); ++v)
    stubs.insert(stubs.end(), degrees[v], static_cast<NodeId>(v));

  Pairing out;
  out.edges.reserve(stubs.size() / 2);
  std::unordered_set<std::uint64_t> present;
  present.reserve(stubs.size());

  auto legal = [&](NodeId a, NodeId b) { return a != b && !present.contains(edge_key(a, b)); };

  while (stubs.size() >= 2) {
    const NodeId a = stubs.back();
    stubs.pop_back();

    std::size_t partner = stubs.size();
    for (std::size_t t = 0; t < kPartnerTries && partner == stubs.size(); ++t) {
      const auto j = static_cast<std::size_t>(rng.below(stubs.size()));
      if (legal(a, stubs[j])) partner = j;
    }
    if (partner == stubs.size()) {
      const auto start = static_cast<std::size_t>(rng.below(stubs.size()));
      for (std::size_t i = 0; i < stubs.size(); ++i) {
        const std::size_t j = (start + i) % stubs.size();
        if (legal(a, stubs[j])) {
          partner = j;
          break;
        }
      }
    }
    if (partner == stubs.size()) {
      if (!allow_drop) {
        out.complete = false;
        return out;
      }
      ++out.dropped;
      continue;
    }
    const NodeId b = stubs[partner];
    stubs[partner] = stubs.back();
    stubs.pop_back();
    present.insert(edge_key(a, b));
    out.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  out.dropped += stubs.size();
  return out;
}

} // namespace

GeneratedGraph generate_regular(std::size_t n, std::size_t degree, Seed seed) {
  if (n == 0) throw InputError("regular graph needs n >= 1");
  if (degree > n - 1)
    throw ConstructionError("regular degree " + std::to_string(degree) + " exceeds n - 1 = " +
                            std::to_string(n - 1));
  if ((n * degree) % 2 != 0)
    throw ConstructionError("regular graph needs n * degree even, got " + std::to_string(n) +
                            " * " + std::to_string(degree));

  Rng rng(seed);
  GeneratedGraph out;
  out.report.target_degrees.assign(n, degree);
  for (std::size_t attempt = 1; attempt <= kPairingAttempts; ++attempt) {
    out.report.attempts = attempt;
    auto pairing = pair_stubs(out.report.target_degrees, rng, /*allow_drop=*/false);
    if (pairing.complete) {
      out.graph = VulnerabilityGraph(n, std::move(pairing.edges));
      return out;
    }
  }
  throw ConstructionError("regular pairing failed after " + std::to_string(kPairingAttempts) +
                          " attempts");
}

GeneratedGraph generate_random(std::size_t n, double edge_prob, Seed seed) {
  if (n == 0) throw InputError("random graph needs n >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw InputError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<VulnerabilityGraph::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform() < edge_prob) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  GeneratedGraph out;
  out.report.attempts = 1;
  out.graph = VulnerabilityGraph(n, std::move(edges));
  return out;
}

GeneratedGraph generate_power_law(std::size_t n, std::size_t min_degree, double exponent,
                                  Seed seed) {
  const auto dist = DegreeDistribution::power_law(min_degree, exponent, n);
  std::vector<double> cdf(dist.pmf().begin(), dist.pmf().end());
  std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());

  Rng rng(seed);
  GeneratedGraph out;
  auto& degrees = out.report.target_degrees;
  degrees.resize(n);
  for (auto& d : degrees) {
    const double u = rng.uniform() * cdf.back();
    d = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    d = std::clamp(d, min_degree, n - 1);
  }
  if (std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}) % 2 != 0) {
    NodeId v;
    do {
      v = static_cast<NodeId>(rng.below(n));
    } while (degrees[v] >= n - 1);
    ++degrees[v];
    out.report.parity_adjusted = v;
  }

  const std::size_t total = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
  for (std::size_t attempt = 1; attempt <= kPairingAttempts; ++attempt) {
    out.report.attempts = attempt;
    auto pairing = pair_stubs(degrees, rng, /*allow_drop=*/true);
    if (static_cast<double>(pairing.dropped) <= kMaxDroppedStubFraction * static_cast<double>(total)) {
      out.report.dropped_stubs = pairing.dropped;
      out.graph = VulnerabilityGraph(n, std::move(pairing.edges));
      return out;
    }
  }
  throw ConstructionError("power-law pairing dropped too many stubs in " +
                          std::to_string(kPairingAttempts) + " attempts");
}

double fit_power_law_exponent(const std::vector<std::size_t>& degrees, std::size_t min_degree,
                              std::size_t max_degree) {
  min_degree = std::max<std::size_t>(min_degree, 1);
  double sum_log = 0.0;
  std::size_t count = 0;
  for (auto d : degrees) {
    if (d < min_degree || d > max_degree) continue;
    sum_log += std::log(static_cast<double>(d));
    ++count;
  }
  if (count == 0 || max_degree <= min_degree)
    throw InputError("no degrees in the fitting range");
  const double target = sum_log / static_cast<double>(count);

  // The score vanishes where E_nu[ln D] equals the sample mean of ln d;
  // E_nu[ln D] is strictly decreasing in nu.
  auto expected_log = [&](double nu) {
    double z = 0.0;
    double acc = 0.0;
    for (std::size_t d = min_degree; d <= max_degree; ++d) {
      const double w = std::pow(static_cast<double>(d), -(nu + 1.0));
      z += w;
      acc += w * std::log(static_cast<double>(d));
    }
    return acc / z;
  };
  double lo = 1e-6;
  double hi = 50.0;
  if (expected_log(lo) <= target) return lo;
  if (expected_log(hi) >= target) return hi;
  for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
    const double mid = 0.5 * (lo + hi);
    (expected_log(mid) > target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace vgsec
