#pragma once

namespace vgsec {

/// Exponential rates of the per-node compromise/recovery dynamics.
struct Parameters {
  double alpha = 0.05; ///< compromise rate with no compromised neighbors
  double beta = 0.2;   ///< recovery rate through detection
  double gamma = 0.1;  ///< extra compromise rate per compromised neighbor
  double eta = 0.0;    ///< recovery rate for any other reason

  double recovery_rate() const noexcept { return beta + eta; }

  /// All rates finite and non-negative. Throws InputError otherwise.
  void validate_rates() const;
  /// validate_rates() plus alpha > 0 and beta + eta > 0, as the fixed point needs.
  void validate_for_solver() const;

  friend bool operator==(const Parameters&, const Parameters&) = default;
};

} // namespace vgsec
