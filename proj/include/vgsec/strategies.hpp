#pragma once

#include <string_view>

#include "vgsec/degree_distribution.hpp"
#include "vgsec/parameters.hpp"

namespace vgsec {

/// Defense-tuning moves by a rate delta omega.
enum class Strategy {
  RaiseDetection = 1, ///< beta -> beta + omega
  LowerCompromise,    ///< alpha -> alpha - omega
  LowerSpread,        ///< gamma -> gamma - omega
};

/// Outcome of a sufficient condition. NotApplicable makes no claim either way.
enum class Guarantee { Holds, NotApplicable, InvalidOmega };

struct StrategyComparison {
  Guarantee s1_beats_s2 = Guarantee::NotApplicable;
  Guarantee s2_beats_s1 = Guarantee::NotApplicable;
  Guarantee s3_beats_s2 = Guarantee::NotApplicable;
};

std::string_view to_string(Guarantee g) noexcept;
std::string_view to_string(Strategy s) noexcept;

StrategyComparison strategy_condition(const Parameters& params, const DegreeDistribution& dist,
                                      double omega);

/// Modified copy of `params`. Throws DomainError when omega <= 0, when alpha
/// would drop to zero or below, or when gamma would become negative.
Parameters strategy_apply(const Parameters& params, Strategy which, double omega);

} // namespace vgsec
