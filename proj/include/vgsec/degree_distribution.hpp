#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace vgsec {

class VulnerabilityGraph;

struct RegularSpec {
  std::size_t degree = 0;
  friend bool operator==(const RegularSpec&, const RegularSpec&) = default;
};

/// Erdos-Renyi G(n, r): degree ~ Binomial(n - 1, r).
struct RandomSpec {
  std::size_t n = 1;
  double edge_prob = 0.0;
  friend bool operator==(const RandomSpec&, const RandomSpec&) = default;
};

/// pmf(d) proportional to d^-(exponent + 1) on [min_degree, n - 1].
struct PowerLawSpec {
  std::size_t min_degree = 1;
  double exponent = 1.0;
  std::size_t n = 2;
  friend bool operator==(const PowerLawSpec&, const PowerLawSpec&) = default;
};

struct EmpiricalSpec {
  std::vector<double> pmf;
  friend bool operator==(const EmpiricalSpec&, const EmpiricalSpec&) = default;
};

/// Degree of a randomly picked vertex.
///
/// The pmf is materialized once at construction over degrees 0..len-1 and
/// normalized to sum to one; the parametric description is kept alongside
/// so the closed-form order rules can be applied.
class DegreeDistribution {
public:
  using Kind = std::variant<RegularSpec, RandomSpec, PowerLawSpec, EmpiricalSpec>;

  static DegreeDistribution regular(std::size_t degree);
  static DegreeDistribution random(std::size_t n, double edge_prob);
  static DegreeDistribution power_law(std::size_t min_degree, double exponent, std::size_t n);
  /// Entries must be finite and non-negative with a sum within 1e-6 of one.
  static DegreeDistribution empirical(std::vector<double> pmf);

  const Kind& kind() const noexcept { return kind_; }
  std::string_view kind_name() const noexcept;
  bool is_empirical() const noexcept { return std::holds_alternative<EmpiricalSpec>(kind_); }

  std::span<const double> pmf() const noexcept { return pmf_; }
  std::size_t support_size() const noexcept { return pmf_.size(); }
  double probability(std::size_t d) const noexcept { return d < pmf_.size() ? pmf_[d] : 0.0; }
  double mean() const noexcept { return mean_; }

  /// Pr[D > d] for d = 0..len-1, accumulated from the upper tail.
  std::vector<double> survival(std::size_t len) const;

private:
  DegreeDistribution(Kind kind, std::vector<double> pmf);

  Kind kind_;
  std::vector<double> pmf_;
  double mean_ = 0.0;
};

/// pmf(d) = |{v : degree(v) = d}| / n over d = 0..n-1.
DegreeDistribution empirical_distribution(const VulnerabilityGraph& graph);

/// Binomial(trials, p) pmf, anchored at the mode and recursed outward so that
/// neither factorials nor (1-p)^trials underflow are involved.
std::vector<double> binomial_pmf(std::size_t trials, double p);

} // namespace vgsec
