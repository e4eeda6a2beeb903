#include "vgsec/strategies.hpp"

#include <algorithm>
#include <cmath>

#include "vgsec/errors.hpp"

namespace vgsec {

std::string_view to_string(Guarantee g) noexcept {
  switch (g) {
  case Guarantee::Holds: return "HOLDS";
  case Guarantee::InvalidOmega: return "INVALID_OMEGA";
  default: return "NOT_APPLICABLE";
  }
}

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
  case Strategy::RaiseDetection: return "S1";
  case Strategy::LowerCompromise: return "S2";
  default: return "S3";
  }
}

namespace {

// omega must fall in (0, upper] (or (0, upper) when open).
Guarantee verdict(bool condition, double omega, double upper, bool open_upper = false) {
  if (!condition) return Guarantee::NotApplicable;
  const bool in_range = omega > 0.0 && (open_upper ? omega < upper : omega <= upper);
  return in_range ? Guarantee::Holds : Guarantee::InvalidOmega;
}

} // namespace

StrategyComparison strategy_condition(const Parameters& params, const DegreeDistribution& dist,
                                      double omega) {
  params.validate_rates();
  const double a = params.alpha;
  const double rec = params.recovery_rate();
  const double mu = dist.mean();
  StrategyComparison out;
  out.s1_beats_s2 = verdict(a > rec, omega, a - rec);
  out.s2_beats_s1 = verdict(a + params.gamma * mu < rec, omega, rec - a - params.gamma * mu);
  // Strategy 2 itself needs alpha - omega > 0.
  if (out.s2_beats_s1 == Guarantee::Holds && !(omega < a)) out.s2_beats_s1 = Guarantee::InvalidOmega;
  out.s3_beats_s2 = verdict(a + rec > 0.0 && a * mu / (a + rec) >= 1.0, omega,
                            std::min(a, params.gamma), /*open_upper=*/true);
  return out;
}

Parameters strategy_apply(const Parameters& params, Strategy which, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be > 0");
  Parameters out = params;
  switch (which) {
  case Strategy::RaiseDetection:
    out.beta += omega;
    break;
  case Strategy::LowerCompromise:
    if (!(params.alpha - omega > 0.0)) throw DomainError("lowering alpha by omega leaves alpha <= 0");
    out.alpha -= omega;
    break;
  case Strategy::LowerSpread:
    if (params.gamma - omega < 0.0) throw DomainError("lowering gamma by omega makes gamma negative");
    out.gamma = std::max(0.0, params.gamma - omega);
    break;
  }
  return out;
}

} // namespace vgsec
