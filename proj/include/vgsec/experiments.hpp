#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vgsec/ensemble.hpp"
#include "vgsec/fixed_point.hpp"
#include "vgsec/generators.hpp"
#include "vgsec/strategies.hpp"
#include "vgsec/threshold.hpp"

namespace vgsec {

/// How to build one of the three topology families.
struct GraphRecipe {
  std::string type = "regular"; ///< regular | random | powerlaw
  std::size_t n = 2000;
  std::size_t degree = 5;
  double edge_prob = 0.002;
  std::size_t min_degree = 2;
  double exponent = 1.75;
  Seed seed = 1;

  std::string label() const;
  nlohmann::ordered_json to_json() const;
};

/// Default graph of each family: regular degree 5, random p = 0.002, and a
/// power law with mean degree close to 4, all on 2000 nodes.
GraphRecipe default_recipe(std::string_view type);
GeneratedGraph build_graph(const GraphRecipe& recipe);

/// Default simulation settings: horizon 330, burn-in 30, unit sampling.
SimConfig default_sim_config();
EnsembleOptions default_ensemble_options();

/// Assigns one of "alpha", "beta", "gamma", "eta"; throws InputError otherwise.
void set_rate(Parameters& params, std::string_view name, double value);

/// An ensemble on one graph plus the analytic numbers for its degree law.
struct CurveStudy {
  std::string label;
  Parameters params;
  double mean_degree = 0.0;
  double analytic_q = 0.0;
  QBounds bounds;
  EnsembleResult ensemble;
};

CurveStudy study_curve(std::string label, const VulnerabilityGraph& graph, const Parameters& params,
                       const SimConfig& base, const EnsembleOptions& options);

/// One strategy-comparison configuration: `better` is predicted to yield the
/// lower compromise probability than `worse`.
struct StrategyCase {
  std::string name;
  Parameters params;
  double omega = 0.0;
  Strategy better = Strategy::RaiseDetection;
  Strategy worse = Strategy::LowerCompromise;
};

/// The three configurations (strategies_1v2, strategies_2v1, strategies_3v2).
const std::vector<StrategyCase>& strategy_cases();

struct StrategyStudy {
  StrategyCase setup;
  StrategyComparison condition;
  CurveStudy base;
  CurveStudy better;
  CurveStudy worse;
};

/// Ensembles for the base rates and both strategies; each gets its own seed
/// stream derived from options.base_seed.
StrategyStudy study_strategies(const VulnerabilityGraph& graph, const StrategyCase& setup,
                               const SimConfig& base, const EnsembleOptions& options);

/// Candidate power-law graphs whose empirical mean degree falls in
/// [mean_lo, mean_hi], one per requested exponent, searched over derived seeds.
struct PowerLawCandidate {
  GraphRecipe recipe;
  GeneratedGraph graph;
  double mean_degree = 0.0;
  double fitted_exponent = 0.0;
  std::size_t tried = 0;
};

std::vector<PowerLawCandidate> find_power_law_graphs(std::size_t n, std::size_t min_degree,
                                                     const std::vector<double>& exponents,
                                                     double mean_lo, double mean_hi,
                                                     std::size_t budget, Seed seed);

struct SurfaceCell {
  double x = 0.0;
  double y = 0.0;
  double sim_mean_ct = 0.0;
  double sim_se = 0.0;
  double lower = 0.0; ///< n alpha / (alpha + beta + eta)
  double upper = 0.0; ///< n (alpha + gamma mu) / (alpha + beta + eta + gamma mu)
  double analytic = 0.0;
  Seed seed = 0;

  /// lower <= simulated <= upper, each side relaxed by `slack` standard errors.
  bool contained(double slack = 1.0) const {
    return sim_mean_ct + slack * sim_se >= lower && sim_mean_ct - slack * sim_se <= upper;
  }
};

/// Simulated steady-state mean C_t against the bounds over a two-rate grid,
/// with the third of alpha, beta, gamma held at `fixed_value` (eta from `base`).
struct SurfaceGrid {
  std::string axis1;
  std::string axis2;
  std::string fixed_name;
  double fixed_value = 0.0;
  std::vector<double> axis1_values;
  std::vector<double> axis2_values;
  std::vector<SurfaceCell> cells; ///< axis1-major
};

SurfaceGrid bounds_surface(const VulnerabilityGraph& graph, std::string_view fixed_name,
                           double fixed_value, const std::vector<double>& axis1_values,
                           const std::vector<double>& axis2_values, const SimConfig& base,
                           const EnsembleOptions& options);

struct ThresholdExceedance {
  double exceed_fraction = 0.0;
  std::size_t samples = 0;
  std::size_t exceeding = 0;
  ThresholdVerdict verdict;
  EnsembleResult ensemble;
};

/// Fraction of post-burn-in C_t samples above c * n across runs, paired with
/// the analytic verdict for the graph's empirical degree law.
ThresholdExceedance threshold_exceedance(const VulnerabilityGraph& graph, const SimConfig& config,
                                         double c, double eps, const EnsembleOptions& options);

struct ExperimentSpec {
  std::string name;
  nlohmann::json overrides = nlohmann::json::object();
  std::filesystem::path output_dir;
  std::size_t threads = 0;
};

struct Manifest {
  std::string experiment;
  nlohmann::ordered_json params;
  std::vector<Seed> seeds;
  std::vector<std::string> files; ///< relative to the output directory
  nlohmann::ordered_json summary;

  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& experiment_names();

/// Runs one study end to end and writes raw CSVs, aggregates, a gnuplot
/// script and manifest.json into spec.output_dir.
Manifest run_experiment(const ExperimentSpec& spec);

} // namespace vgsec
