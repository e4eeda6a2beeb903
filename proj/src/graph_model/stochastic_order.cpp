#include "vgsec/stochastic_order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "vgsec/errors.hpp"

namespace vgsec {

Relation flip(Relation r) noexcept {
  switch (r) {
  case Relation::LE: return Relation::GE;
  case Relation::GE: return Relation::LE;
  default: return r;
  }
}

std::string_view to_string(Relation r) noexcept {
  switch (r) {
  case Relation::LE: return "LE";
  case Relation::GE: return "GE";
  case Relation::EQ: return "EQ";
  default: return "INCOMPARABLE";
  }
}

std::string_view to_string(OrderBasis b) noexcept {
  switch (b) {
  case OrderBasis::SameFamilyRule: return "same_family_rule";
  case OrderBasis::CrossFamilyRule: return "cross_family_rule";
  default: return "tabulated";
  }
}

OrderVerdict stochastic_order(const DegreeDistribution& first, const DegreeDistribution& second,
                              double tol) {
  const std::size_t len = std::max(first.support_size(), second.support_size());
  const auto s1 = first.survival(len);
  const auto s2 = second.survival(len);

  bool le = true;
  bool ge = true;
  OrderVerdict verdict;
  for (std::size_t d = 0; d < len; ++d) {
    if (s1[d] > s2[d] + tol) le = false;
    if (s2[d] > s1[d] + tol) ge = false;
    if (!le && !ge && !verdict.witness) verdict.witness = d;
  }
  if (le && ge)
    verdict.relation = Relation::EQ;
  else if (le)
    verdict.relation = Relation::LE;
  else if (ge)
    verdict.relation = Relation::GE;
  else
    verdict.relation = Relation::Incomparable;
  return verdict;
}

namespace {

template <class T>
Relation compare_values(T a, T b) {
  if (a < b) return Relation::LE;
  if (b < a) return Relation::GE;
  return Relation::EQ;
}

OrderVerdict rule(Relation r, OrderBasis basis) {
  OrderVerdict v;
  v.relation = r;
  v.basis = basis;
  return v;
}

} // namespace

OrderVerdict order_same_family(const DegreeDistribution& first, const DegreeDistribution& second) {
  if (first.kind().index() != second.kind().index())
    throw InputError("same-family comparison needs two distributions of one kind, got " +
                     std::string(first.kind_name()) + " and " + std::string(second.kind_name()));
  if (first.is_empirical()) throw InputError("same-family comparison needs parametric distributions");

  constexpr auto same = OrderBasis::SameFamilyRule;
  if (auto* a = std::get_if<RegularSpec>(&first.kind())) {
    const auto& b = std::get<RegularSpec>(second.kind());
    return rule(compare_values(a->degree, b.degree), same);
  }
  if (auto* a = std::get_if<RandomSpec>(&first.kind())) {
    const auto& b = std::get<RandomSpec>(second.kind());
    if (a->n == 1 && b.n == 1) return rule(Relation::EQ, same);
    const Relation by_n = compare_values(a->n, b.n);
    const Relation by_r = compare_values(a->edge_prob, b.edge_prob);
    // Binomial(m, r) grows stochastically in both m and r.
    if (by_n == Relation::EQ) return rule(by_r, same);
    if (by_r == Relation::EQ || by_r == by_n) return rule(by_n, same);
    return stochastic_order(first, second);
  }
  const auto& a = std::get<PowerLawSpec>(first.kind());
  const auto& b = std::get<PowerLawSpec>(second.kind());
  if (a.min_degree != b.min_degree || a.n != b.n) return stochastic_order(first, second);
  if (a.min_degree + 1 == a.n) return rule(Relation::EQ, same); // both are point masses
  // A heavier exponent means a lighter tail: larger exponent is stochastically smaller.
  return rule(compare_values(b.exponent, a.exponent), same);
}

EdgeProbWindow random_power_law_window(std::size_t min_degree, double exponent, std::size_t n) {
  const double l = static_cast<double>(min_degree);
  const double slack = static_cast<double>(n) - l - 1.0;
  if (n < 2 || slack <= 0.0)
    return {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  return {l * l / (2.0 * std::numbers::pi * slack * exponent * exponent),
          l / (static_cast<double>(n) - 1.0)};
}

OrderVerdict order_cross_family(const DegreeDistribution& first, const DegreeDistribution& second,
                                std::size_t n) {
  const bool power_first = std::holds_alternative<PowerLawSpec>(first.kind());
  const auto& power = power_first ? first : second;
  const auto& other = power_first ? second : first;
  if (!std::holds_alternative<PowerLawSpec>(power.kind()) ||
      !(std::holds_alternative<RegularSpec>(other.kind()) ||
        std::holds_alternative<RandomSpec>(other.kind())))
    throw InputError("cross-family comparison supports (regular|random) vs powerlaw, got " +
                     std::string(first.kind_name()) + " and " + std::string(second.kind_name()));

  const auto& pl = std::get<PowerLawSpec>(power.kind());
  const OrderVerdict tabulated = stochastic_order(other, power);
  bool window_holds = false;
  if (auto* reg = std::get_if<RegularSpec>(&other.kind()))
    window_holds = pl.min_degree >= reg->degree;
  else
    window_holds = random_power_law_window(pl.min_degree, pl.exponent, n)
                       .contains(std::get<RandomSpec>(other.kind()).edge_prob);

  OrderVerdict verdict = tabulated;
  if (window_holds) {
    if (tabulated.relation == Relation::LE || tabulated.relation == Relation::EQ) {
      verdict = rule(tabulated.relation, OrderBasis::CrossFamilyRule);
    } else {
      // The random-graph window rests on a normal approximation and can miss.
      verdict.rule_overridden = true;
    }
  }
  if (power_first) verdict.relation = flip(verdict.relation);
  return verdict;
}

} // namespace vgsec
