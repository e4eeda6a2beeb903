#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

double binomial(std::size_t d, std::size_t k, double x) {
  if (k > d) return 0.0;
  if (x == 0.0) return k == 0 ? 1.0 : 0.0;
  if (x == 1.0) return k == d ? 1.0 : 0.0;
  const double dd = static_cast<double>(d);
  const double kk = static_cast<double>(k);
  const double log_c = std::lgamma(dd + 1) - std::lgamma(kk + 1) - std::lgamma(dd - kk + 1);
  return std::exp(log_c + kk * std::log(x) + (dd - kk) * std::log1p(-x));
}

double h(const vgsec::Parameters& p, const std::vector<double>& pmf, double x) {
  long double total = 0.0L;
  for (std::size_t d = 0; d < pmf.size(); ++d) {
    if (pmf[d] == 0.0) continue;
    long double inner = 0.0L;
    for (std::size_t k = 0; k <= d; ++k)
      inner += binomial(d, k, x) / (p.alpha + p.gamma * static_cast<double>(k));
    total += pmf[d] * inner;
  }
  return static_cast<double>((p.beta + p.eta) * total);
}

double fixed_point(const vgsec::Parameters& p, const std::vector<double>& pmf) {
  double q = p.alpha / (p.alpha + p.beta + p.eta);
  for (int i = 0; i < 1000000; ++i) {
    const double next = 1.0 / (1.0 + h(p, pmf, q));
    if (std::abs(next - q) < 1e-15) return next;
    q = next;
  }
  return q;
}

long double phi(long double x) {
  // Phi(x) = 1/2 + pdf(x) * sum_n x^(2n+1) / (1 * 3 * ... * (2n+1))
  const long double pdf = std::exp(-x * x / 2.0L) / std::sqrt(2.0L * 3.14159265358979323846264338327950288L);
  long double term = x;
  long double sum = x;
  for (int n = 1; n < 2000; ++n) {
    term *= x * x / (2.0L * n + 1.0L);
    sum += term;
    if (std::abs(term) < 1e-30L * std::abs(sum)) break;
  }
  return 0.5L + pdf * sum;
}

double quantile(double eps) {
  const long double target = 1.0L - static_cast<long double>(eps);
  long double lo = -12.0L;
  long double hi = 12.0L;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2.0L;
    (phi(mid) < target ? lo : hi) = mid;
  }
  return static_cast<double>((lo + hi) / 2.0L);
}

std::vector<double> survival(const std::vector<double>& pmf, std::size_t len) {
  std::vector<double> out(len);
  double cdf = 0.0;
  for (std::size_t d = 0; d < len; ++d) {
    cdf += d < pmf.size() ? pmf[d] : 0.0;
    out[d] = 1.0 - cdf;
  }
  return out;
}

std::vector<double> stationary_marginals(const vgsec::VulnerabilityGraph& g, const vgsec::Parameters& p) {
  const std::size_t n = g.node_count();
  const std::size_t states = std::size_t{1} << n;
  // Solve pi Q = 0 with the first equation replaced by sum(pi) = 1, written as A pi = b.
  std::vector<std::vector<long double>> a(states, std::vector<long double>(states + 1, 0.0L));
  for (std::size_t s = 0; s < states; ++s) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t t = s ^ (std::size_t{1} << v);
      double rate;
      if (s >> v & 1) {
        rate = p.beta + p.eta;
      } else {
        std::size_t k = 0;
        for (auto u : g.neighbors(static_cast<vgsec::NodeId>(v))) k += s >> u & 1;
        rate = p.alpha + p.gamma * static_cast<double>(k);
      }
      a[t][s] += rate; // inflow to t from s
      a[s][s] -= rate;
    }
  }
  for (std::size_t s = 0; s < states; ++s) a[0][s] = 1.0L;
  a[0][states] = 1.0L;
  for (std::size_t c = 0; c < states; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < states; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) < 1e-300L) throw std::runtime_error("singular generator");
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < states; ++r) {
      if (r == c || a[r][c] == 0.0L) continue;
      const long double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= states; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<double> marg(n, 0.0);
  for (std::size_t s = 0; s < states; ++s) {
    const long double pi = a[s][states] / a[s][s];
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1) marg[v] += static_cast<double>(pi);
  }
  return marg;
}

std::vector<double> power_law_pmf(std::size_t min_degree, double exponent, std::size_t n) {
  std::vector<double> pmf(n, 0.0);
  double z = 0.0;
  for (std::size_t d = min_degree; d < n; ++d) z += std::pow(static_cast<double>(d), -(exponent + 1.0));
  for (std::size_t d = min_degree; d < n; ++d) pmf[d] = std::pow(static_cast<double>(d), -(exponent + 1.0)) / z;
  return pmf;
}

using Edge = vgsec::VulnerabilityGraph::Edge;
using vgsec::NodeId;

vgsec::VulnerabilityGraph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t v = 0; v + 1 < n; ++v) e.push_back({static_cast<NodeId>(v), static_cast<NodeId>(v + 1)});
  return {n, e};
}

vgsec::VulnerabilityGraph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v) e.push_back({static_cast<NodeId>(v), static_cast<NodeId>((v + 1) % n)});
  return {n, e};
}

vgsec::VulnerabilityGraph star(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t v = 1; v < n; ++v) e.push_back({0, static_cast<NodeId>(v)});
  return {n, e};
}

vgsec::VulnerabilityGraph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  return {n, e};
}

} // namespace oracle
