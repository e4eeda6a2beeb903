#include "vgsec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "vgsec/degree_distribution.hpp"
#include "vgsec/errors.hpp"
#include "vgsec/output.hpp"

namespace vgsec {

using nlohmann::ordered_json;

std::string GraphRecipe::label() const {
  if (type == "regular") return fmt::format("regular_g{}", degree);
  if (type == "random") return fmt::format("random_p{}", edge_prob);
  return fmt::format("powerlaw_l{}_nu{}", min_degree, exponent);
}

ordered_json GraphRecipe::to_json() const {
  ordered_json j;
  j["type"] = type;
  j["n"] = n;
  if (type == "regular") j["degree"] = degree;
  if (type == "random") j["edge_prob"] = edge_prob;
  if (type == "powerlaw") {
    j["min_degree"] = min_degree;
    j["exponent"] = exponent;
  }
  j["seed"] = seed;
  return j;
}

GraphRecipe default_recipe(std::string_view type) {
  GraphRecipe r;
  r.type = std::string(type);
  if (type != "regular" && type != "random" && type != "powerlaw")
    throw InputError("unknown graph type '" + r.type + "'");
  return r;
}

GeneratedGraph build_graph(const GraphRecipe& recipe) {
  if (recipe.type == "regular") return generate_regular(recipe.n, recipe.degree, recipe.seed);
  if (recipe.type == "random") return generate_random(recipe.n, recipe.edge_prob, recipe.seed);
  if (recipe.type == "powerlaw")
    return generate_power_law(recipe.n, recipe.min_degree, recipe.exponent, recipe.seed);
  throw InputError("unknown graph type '" + recipe.type + "'");
}

SimConfig default_sim_config() { return SimConfig{}; }

EnsembleOptions default_ensemble_options() { return EnsembleOptions{}; }

void set_rate(Parameters& params, std::string_view name, double value) {
  if (name == "alpha")
    params.alpha = value;
  else if (name == "beta")
    params.beta = value;
  else if (name == "gamma")
    params.gamma = value;
  else if (name == "eta")
    params.eta = value;
  else
    throw InputError("unknown rate '" + std::string(name) + "'");
}

CurveStudy study_curve(std::string label, const VulnerabilityGraph& graph, const Parameters& params,
                       const SimConfig& base, const EnsembleOptions& options) {
  CurveStudy study;
  study.label = std::move(label);
  study.params = params;
  const auto dist = empirical_distribution(graph);
  study.mean_degree = dist.mean();
  study.bounds = bounds(params, dist);
  study.analytic_q = params.alpha > 0.0 ? solve_q(params, dist).q : 0.0;
  SimConfig config = base;
  config.params = params;
  study.ensemble = run_ensemble(graph, config, options);
  return study;
}

const std::vector<StrategyCase>& strategy_cases() {
  static const std::vector<StrategyCase> cases{
      {"strategies_1v2", Parameters{0.1, 0.05, 0.1, 0.0}, 0.05, Strategy::RaiseDetection,
       Strategy::LowerCompromise},
      {"strategies_2v1", Parameters{0.05, 0.3, 0.05, 0.0}, 0.04, Strategy::LowerCompromise,
       Strategy::RaiseDetection},
      {"strategies_3v2", Parameters{0.1, 0.2, 0.1, 0.0}, 0.05, Strategy::LowerSpread,
       Strategy::LowerCompromise},
  };
  return cases;
}

StrategyStudy study_strategies(const VulnerabilityGraph& graph, const StrategyCase& setup,
                               const SimConfig& base, const EnsembleOptions& options) {
  StrategyStudy out;
  out.setup = setup;
  out.condition = strategy_condition(setup.params, empirical_distribution(graph), setup.omega);
  auto with_seed = [&](std::size_t k) {
    EnsembleOptions o = options;
    o.base_seed = derive_seed(options.base_seed, k);
    return o;
  };
  out.base = study_curve("base", graph, setup.params, base, with_seed(0));
  out.better = study_curve(std::string(to_string(setup.better)), graph,
                           strategy_apply(setup.params, setup.better, setup.omega), base, with_seed(1));
  out.worse = study_curve(std::string(to_string(setup.worse)), graph,
                          strategy_apply(setup.params, setup.worse, setup.omega), base, with_seed(2));
  return out;
}

std::vector<PowerLawCandidate> find_power_law_graphs(std::size_t n, std::size_t min_degree,
                                                     const std::vector<double>& exponents,
                                                     double mean_lo, double mean_hi,
                                                     std::size_t budget, Seed seed) {
  std::vector<PowerLawCandidate> found;
  for (std::size_t e = 0; e < exponents.size(); ++e) {
    bool hit = false;
    for (std::size_t k = 0; k < budget && !hit; ++k) {
      GraphRecipe recipe;
      recipe.type = "powerlaw";
      recipe.n = n;
      recipe.min_degree = min_degree;
      recipe.exponent = exponents[e];
      recipe.seed = derive_seed(derive_seed(seed, e), k);
      auto graph = build_graph(recipe);
      const double mean = graph.graph.mean_degree();
      if (mean < mean_lo || mean > mean_hi) continue;
      PowerLawCandidate c;
      c.recipe = recipe;
      c.mean_degree = mean;
      c.fitted_exponent = fit_power_law_exponent(graph.graph.degrees(), min_degree, n - 1);
      c.graph = std::move(graph);
      c.tried = k + 1;
      found.push_back(std::move(c));
      hit = true;
    }
    if (!hit)
      throw ConstructionError(fmt::format("no power-law graph with exponent {} and mean degree in [{}, {}] "
                                          "within {} candidates",
                                          exponents[e], mean_lo, mean_hi, budget));
  }
  return found;
}

SurfaceGrid bounds_surface(const VulnerabilityGraph& graph, std::string_view fixed_name,
                           double fixed_value, const std::vector<double>& axis1_values,
                           const std::vector<double>& axis2_values, const SimConfig& base,
                           const EnsembleOptions& options) {
  static const std::vector<std::string> rates{"alpha", "beta", "gamma"};
  if (std::find(rates.begin(), rates.end(), fixed_name) == rates.end())
    throw InputError("surface fixed rate must be alpha, beta or gamma");
  for (const auto* axis : {&axis1_values, &axis2_values}) {
    if (axis->empty()) throw InputError("surface axes must not be empty");
    for (std::size_t i = 1; i < axis->size(); ++i)
      if (!((*axis)[i] > (*axis)[i - 1])) throw InputError("surface grid values must be strictly increasing");
  }

  SurfaceGrid grid;
  grid.fixed_name = std::string(fixed_name);
  grid.fixed_value = fixed_value;
  for (const auto& r : rates) {
    if (r == fixed_name) continue;
    (grid.axis1.empty() ? grid.axis1 : grid.axis2) = r;
  }
  grid.axis1_values = axis1_values;
  grid.axis2_values = axis2_values;

  const auto dist = empirical_distribution(graph);
  const double n = static_cast<double>(graph.node_count());
  std::size_t index = 0;
  for (double x : axis1_values) {
    for (double y : axis2_values) {
      Parameters p = base.params;
      set_rate(p, grid.fixed_name, fixed_value);
      set_rate(p, grid.axis1, x);
      set_rate(p, grid.axis2, y);
      SimConfig config = base;
      config.params = p;
      EnsembleOptions o = options;
      o.base_seed = derive_seed(options.base_seed, index++);
      o.n_windows = 0;
      const auto ens = run_ensemble(graph, config, o);
      const auto b = bounds(p, dist);

      SurfaceCell cell;
      cell.x = x;
      cell.y = y;
      cell.seed = o.base_seed;
      cell.sim_mean_ct = ens.steady_mean_ct;
      cell.sim_se = ens.steady_mean_ct_se;
      cell.lower = n * b.lower;
      cell.upper = n * b.upper;
      cell.analytic = p.alpha > 0.0 ? n * solve_q(p, dist).q : 0.0;
      grid.cells.push_back(cell);
    }
  }
  return grid;
}

ThresholdExceedance threshold_exceedance(const VulnerabilityGraph& graph, const SimConfig& config,
                                         double c, double eps, const EnsembleOptions& options) {
  ThresholdExceedance out;
  out.verdict = threshold_check(config.params, empirical_distribution(graph), graph.node_count(), c, eps);
  EnsembleOptions o = options;
  o.n_windows = 0;
  out.ensemble = run_ensemble(graph, config, o);
  const double limit = c * static_cast<double>(graph.node_count());
  for (const auto& run : out.ensemble.runs) {
    for (std::size_t k = 0; k < run.ct_samples.size(); ++k) {
      if (out.ensemble.sample_times[k] < config.burn_in) continue;
      ++out.samples;
      if (static_cast<double>(run.ct_samples[k]) > limit) ++out.exceeding;
    }
  }
  out.exceed_fraction = out.samples == 0 ? 0.0 : static_cast<double>(out.exceeding) / static_cast<double>(out.samples);
  return out;
}

ordered_json Manifest::to_json() const {
  ordered_json j;
  j["experiment"] = experiment;
  j["params"] = params;
  j["seeds"] = seeds;
  j["files"] = files;
  j["summary"] = summary;
  return j;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{
      "stability",      "topology_regular", "topology_random", "topology_powerlaw",    "strategies_1v2",
      "strategies_2v1", "strategies_3v2",   "bounds_surface",  "threshold_validation"};
  return names;
}

namespace {

// Typed access to experiment overrides; anything left unread is rejected.
class Overrides {
public:
  Overrides(const nlohmann::json& j, std::string experiment) : j_(j), experiment_(std::move(experiment)) {
    if (!j_.is_object()) throw InputError("experiment overrides must be a JSON object");
  }

  double real(const std::string& key, double fallback) {
    const auto* v = find(key);
    if (!v) return fallback;
    if (!v->is_number()) mistyped(key, "a number");
    return v->get<double>();
  }

  std::size_t count(const std::string& key, std::size_t fallback) {
    const auto* v = find(key);
    if (!v) return fallback;
    if (!is_count(*v)) mistyped(key, "a non-negative integer");
    return v->get<std::size_t>();
  }

  std::string text(const std::string& key, std::string fallback) {
    const auto* v = find(key);
    if (!v) return fallback;
    if (!v->is_string()) mistyped(key, "a string");
    return v->get<std::string>();
  }

  std::vector<double> reals(const std::string& key, std::vector<double> fallback) {
    const auto* v = find(key);
    if (!v) return fallback;
    if (!v->is_array() || v->empty()) mistyped(key, "a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& x : *v) {
      if (!x.is_number()) mistyped(key, "a non-empty array of numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }

  std::vector<std::size_t> counts(const std::string& key, std::vector<std::size_t> fallback) {
    const auto* v = find(key);
    if (!v) return fallback;
    if (!v->is_array() || v->empty()) mistyped(key, "a non-empty array of integers");
    std::vector<std::size_t> out;
    for (const auto& x : *v) {
      if (!is_count(x)) mistyped(key, "a non-empty array of integers");
      out.push_back(x.get<std::size_t>());
    }
    return out;
  }

  void finish() const {
    for (const auto& [key, value] : j_.items())
      if (!used_.contains(key)) throw InputError("unknown override '" + key + "' for experiment " + experiment_);
  }

private:
  static bool is_count(const nlohmann::json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
  }

  const nlohmann::json* find(const std::string& key) {
    used_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  [[noreturn]] void mistyped(const std::string& key, const char* expected) const {
    throw InputError("override '" + key + "' for experiment " + experiment_ + " must be " + expected);
  }

  const nlohmann::json& j_;
  std::string experiment_;
  std::set<std::string> used_;
};

struct Common {
  Parameters params;
  SimConfig sim;
  EnsembleOptions ensemble;
  std::size_t n = 2000;
  Seed graph_seed = 1;
};

Common read_common(Overrides& o, const Parameters& default_params, std::size_t default_runs, std::size_t threads) {
  Common c;
  c.params.alpha = o.real("alpha", default_params.alpha);
  c.params.beta = o.real("beta", default_params.beta);
  c.params.gamma = o.real("gamma", default_params.gamma);
  c.params.eta = o.real("eta", default_params.eta);
  c.params.validate_rates();
  c.sim = default_sim_config();
  c.sim.params = c.params;
  c.sim.horizon = o.real("horizon", c.sim.horizon);
  c.sim.burn_in = o.real("burn_in", c.sim.burn_in);
  c.sim.sample_interval = o.real("sample_interval", c.sim.sample_interval);
  c.ensemble = default_ensemble_options();
  c.ensemble.runs = o.count("runs", default_runs);
  c.ensemble.base_seed = o.count("base_seed", 1);
  c.ensemble.window = o.real("window", c.ensemble.window);
  c.ensemble.n_windows = o.count("n_windows", c.ensemble.n_windows);
  c.ensemble.threads = threads;
  c.n = o.count("n", 2000);
  c.graph_seed = o.count("graph_seed", 1);
  if (c.ensemble.runs == 0) throw InputError("runs must be >= 1");
  return c;
}

ordered_json params_json(const Parameters& p) {
  return ordered_json{{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"eta", p.eta}};
}

ordered_json common_json(const Common& c) {
  ordered_json j;
  j["rates"] = params_json(c.params);
  j["n"] = c.n;
  j["horizon"] = c.sim.horizon;
  j["burn_in"] = c.sim.burn_in;
  j["sample_interval"] = c.sim.sample_interval;
  j["runs"] = c.ensemble.runs;
  j["base_seed"] = c.ensemble.base_seed;
  j["window"] = c.ensemble.window;
  j["n_windows"] = c.ensemble.n_windows;
  j["graph_seed"] = c.graph_seed;
  return j;
}

class Context {
public:
  Context(const ExperimentSpec& spec) : dir_(spec.output_dir) {
    std::filesystem::create_directories(dir_);
    manifest.experiment = spec.name;
  }

  std::filesystem::path file(const std::string& name) {
    manifest.files.push_back(name);
    return dir_ / name;
  }

  void add_seeds(const EnsembleResult& e) {
    for (const auto& r : e.runs) manifest.seeds.push_back(r.seed);
  }

  Manifest finish() {
    manifest.files.push_back("manifest.json");
    write_json_file(dir_ / "manifest.json", manifest.to_json());
    return manifest;
  }

  Manifest manifest;

private:
  std::filesystem::path dir_;
};

ordered_json curve_summary(const CurveStudy& s) {
  ordered_json j;
  j["label"] = s.label;
  j["rates"] = params_json(s.params);
  j["mean_degree"] = s.mean_degree;
  j["analytic_q"] = s.analytic_q;
  j["lower"] = s.bounds.lower;
  j["upper"] = s.bounds.upper;
  j["q_bar"] = s.ensemble.q_bar;
  j["steady_mean_ct"] = s.ensemble.steady_mean_ct;
  j["steady_mean_ct_se"] = s.ensemble.steady_mean_ct_se;
  return j;
}

// Aggregated curves, per-run summaries and per-run C_t samples for a set of studies.
void write_curves(Context& ctx, const std::string& prefix, const std::vector<const CurveStudy*>& studies) {
  std::vector<std::string> header{"t"};
  for (const auto* s : studies) header.push_back(s->label);
  CsvWriter curves(ctx.file(prefix + "_curves.csv"), header);
  const auto& times = studies.front()->ensemble.sample_times;
  for (std::size_t k = 0; k < times.size(); ++k) {
    curves.field(times[k]);
    for (const auto* s : studies) curves.field(s->ensemble.mean_ct[k]);
    curves.end_row();
  }
  curves.close();

  CsvWriter runs(ctx.file(prefix + "_runs.csv"), {"label", "run", "seed", "steady_mean_ct", "events"});
  CsvWriter samples(ctx.file(prefix + "_run_ct.csv"), {"label", "run", "t", "ct"});
  for (const auto* s : studies) {
    for (std::size_t r = 0; r < s->ensemble.runs.size(); ++r) {
      const auto& run = s->ensemble.runs[r];
      runs.field(s->label).field(r).field(static_cast<unsigned long long>(run.seed)).field(run.steady_mean_ct)
          .field(run.event_count);
      runs.end_row();
      for (std::size_t k = 0; k < run.ct_samples.size(); ++k) {
        samples.field(s->label).field(r).field(s->ensemble.sample_times[k]).field(run.ct_samples[k]);
        samples.end_row();
      }
    }
    ctx.add_seeds(s->ensemble);
  }
  runs.close();
  samples.close();
}

void write_curve_plot(Context& ctx, const std::string& prefix, std::size_t series, const std::string& title) {
  std::ostringstream gp;
  gp << "# " << title << "\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set xlabel 'time'\nset ylabel 'mean C_t'\n"
     << "set terminal pngcairo size 900,600\n"
     << "set output '" << prefix << ".png'\n"
     << "plot for [i=2:" << series + 1 << "] '" << prefix << "_curves.csv' using 1:i with lines\n";
  write_text_file(ctx.file(prefix + ".gp"), gp.str());
}

// Ascending order of steady means along `studies`, each gap measured in
// standard errors of the difference.
ordered_json ordering_summary(const std::vector<const CurveStudy*>& studies) {
  ordered_json j = ordered_json::array();
  for (std::size_t i = 0; i + 1 < studies.size(); ++i) {
    const auto& a = studies[i]->ensemble;
    const auto& b = studies[i + 1]->ensemble;
    const double se = std::hypot(a.steady_mean_ct_se, b.steady_mean_ct_se);
    const double gap = b.steady_mean_ct - a.steady_mean_ct;
    j.push_back({{"smaller", studies[i]->label},
                 {"larger", studies[i + 1]->label},
                 {"gap", gap},
                 {"gap_in_se", se > 0.0 ? gap / se : 0.0},
                 {"ordered", gap > 0.0}});
  }
  return j;
}

Manifest run_stability(const ExperimentSpec& spec) {
  Overrides o(spec.overrides, spec.name);
  Common c = read_common(o, Parameters{}, 100, spec.threads);
  const double threshold = o.real("stddev_threshold", 0.03);
  o.finish();
  if (c.ensemble.n_windows < 2) throw InputError("stability needs n_windows >= 2");

  Context ctx(spec);
  ctx.manifest.params = common_json(c);
  ctx.manifest.params["stddev_threshold"] = threshold;
  ctx.manifest.params["graphs"] = ordered_json::array();

  constexpr double kBin = 0.005;
  constexpr std::size_t kBins = 20;
  std::vector<std::string> hist_header{"bin_lo", "bin_hi"};
  std::vector<std::vector<std::size_t>> hist;
  ordered_json summary = ordered_json::array();

  std::size_t k = 0;
  for (const char* type : {"regular", "random", "powerlaw"}) {
    GraphRecipe recipe = default_recipe(type);
    recipe.n = c.n;
    recipe.seed = derive_seed(c.graph_seed, k);
    ctx.manifest.params["graphs"].push_back(recipe.to_json());
    ctx.manifest.seeds.push_back(recipe.seed);
    const auto graph = build_graph(recipe);
    EnsembleOptions opts = c.ensemble;
    opts.base_seed = derive_seed(c.ensemble.base_seed, k++);
    const auto study = study_curve(recipe.label(), graph.graph, c.params, c.sim, opts);
    ctx.add_seeds(study.ensemble);

    const auto& sd = study.ensemble.q_i_window_stddev;
    CsvWriter nodes(ctx.file("stability_" + recipe.label() + ".csv"),
                    {"node", "degree", "q_mean", "q_window_stddev"});
    std::vector<std::size_t> counts(kBins + 1, 0);
    std::size_t below = 0;
    for (std::size_t v = 0; v < sd.size(); ++v) {
      nodes.field(v).field(graph.graph.degree(static_cast<NodeId>(v))).field(study.ensemble.q_i_mean[v]).field(sd[v]);
      nodes.end_row();
      ++counts[std::min(kBins, static_cast<std::size_t>(sd[v] / kBin))];
      if (sd[v] < threshold) ++below;
    }
    nodes.close();
    hist_header.push_back(recipe.label());
    hist.push_back(std::move(counts));

    auto s = curve_summary(study);
    s["mean_window_stddev"] = std::accumulate(sd.begin(), sd.end(), 0.0) / static_cast<double>(sd.size());
    s["fraction_below_threshold"] = static_cast<double>(below) / static_cast<double>(sd.size());
    summary.push_back(s);
  }

  CsvWriter h(ctx.file("stability_histogram.csv"), hist_header);
  for (std::size_t b = 0; b <= kBins; ++b) {
    h.field(kBin * static_cast<double>(b));
    if (b == kBins)
      h.field("inf");
    else
      h.field(kBin * static_cast<double>(b + 1));
    for (const auto& counts : hist) h.field(counts[b]);
    h.end_row();
  }
  h.close();
  write_text_file(ctx.file("stability.gp"),
                  "# Histogram of per-node window standard deviations of q_i\n"
                  "set datafile separator ','\nset key autotitle columnhead\nset style data histograms\n"
                  "set style fill solid 0.6\nset xlabel 'std dev of q_i'\nset ylabel 'nodes'\n"
                  "set terminal pngcairo size 900,600\nset output 'stability.png'\n"
                  "plot for [i=3:5] 'stability_histogram.csv' using i:xtic(1)\n");
  ctx.manifest.summary = ordered_json{{"graphs", summary}};
  return ctx.finish();
}

Manifest run_topology(const ExperimentSpec& spec, const std::string& family) {
  Overrides o(spec.overrides, spec.name);
  Common c = read_common(o, Parameters{}, family == "powerlaw" ? 2000 : 100, spec.threads);
  Context ctx(spec);

  std::vector<GraphRecipe> recipes;
  std::vector<GeneratedGraph> graphs;
  ordered_json extra;
  if (family == "regular") {
    for (auto g : o.counts("degrees", {2, 3, 4})) {
      GraphRecipe r = default_recipe("regular");
      r.degree = g;
      recipes.push_back(r);
    }
    std::sort(recipes.begin(), recipes.end(), [](auto& a, auto& b) { return a.degree < b.degree; });
  } else if (family == "random") {
    for (auto p : o.reals("edge_probs", {0.001, 0.002, 0.003})) {
      GraphRecipe r = default_recipe("random");
      r.edge_prob = p;
      recipes.push_back(r);
    }
    std::sort(recipes.begin(), recipes.end(), [](auto& a, auto& b) { return a.edge_prob < b.edge_prob; });
  } else {
    auto exponents = o.reals("exponents", {1.85, 1.9, 1.95});
    const auto min_degree = o.count("min_degree", 2);
    const auto window = o.reals("mean_window", {3.34, 3.37});
    const auto budget = o.count("candidate_budget", 3000);
    if (window.size() != 2 || !(window[0] <= window[1])) throw InputError("mean_window must be [lo, hi]");
    // Larger exponent is the stochastically smaller law, so list it first.
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
    auto found = find_power_law_graphs(c.n, min_degree, exponents, window[0], window[1], budget, c.graph_seed);
    extra["min_degree"] = min_degree;
    extra["mean_window"] = window;
    extra["candidate_budget"] = budget;
    extra["candidates"] = ordered_json::array();
    for (auto& f : found) {
      extra["candidates"].push_back({{"exponent", f.recipe.exponent},
                                     {"seed", f.recipe.seed},
                                     {"mean_degree", f.mean_degree},
                                     {"fitted_exponent", f.fitted_exponent},
                                     {"tried", f.tried}});
      recipes.push_back(f.recipe);
      graphs.push_back(std::move(f.graph));
    }
  }
  o.finish();

  ctx.manifest.params = common_json(c);
  ctx.manifest.params["graphs"] = ordered_json::array();
  for (std::size_t i = 0; i < recipes.size(); ++i) {
    auto& r = recipes[i];
    r.n = c.n;
    if (family != "powerlaw") {
      r.seed = derive_seed(c.graph_seed, i);
      graphs.push_back(build_graph(r));
    }
    ctx.manifest.params["graphs"].push_back(r.to_json());
    ctx.manifest.seeds.push_back(r.seed);
  }
  for (auto& [k, v] : extra.items()) ctx.manifest.params[k] = v;

  std::vector<CurveStudy> studies;
  for (std::size_t i = 0; i < recipes.size(); ++i) {
    EnsembleOptions opts = c.ensemble;
    opts.base_seed = derive_seed(c.ensemble.base_seed, i);
    studies.push_back(study_curve(recipes[i].label(), graphs[i].graph, c.params, c.sim, opts));
  }
  std::vector<const CurveStudy*> ptrs;
  for (const auto& s : studies) ptrs.push_back(&s);
  const std::string prefix = "topology_" + family;
  write_curves(ctx, prefix, ptrs);
  write_curve_plot(ctx, prefix, ptrs.size(), "mean C_t by topology (" + family + ")");

  ordered_json summary;
  summary["graphs"] = ordered_json::array();
  for (const auto* s : ptrs) summary["graphs"].push_back(curve_summary(*s));
  summary["ordering"] = ordering_summary(ptrs);
  write_json_file(ctx.file(prefix + "_summary.json"), summary);
  ctx.manifest.summary = summary;
  return ctx.finish();
}

Manifest run_strategies(const ExperimentSpec& spec) {
  const auto& cases = strategy_cases();
  auto it = std::find_if(cases.begin(), cases.end(), [&](const auto& c) { return c.name == spec.name; });
  StrategyCase setup = *it;

  Overrides o(spec.overrides, spec.name);
  Common c = read_common(o, setup.params, 100, spec.threads);
  setup.params = c.params;
  setup.omega = o.real("omega", setup.omega);
  const auto graph_type = o.text("graph", "random");
  GraphRecipe recipe = default_recipe(graph_type);
  recipe.degree = o.count("degree", recipe.degree);
  recipe.edge_prob = o.real("edge_prob", recipe.edge_prob);
  recipe.exponent = o.real("exponent", recipe.exponent);
  o.finish();
  recipe.n = c.n;
  recipe.seed = c.graph_seed;

  Context ctx(spec);
  ctx.manifest.params = common_json(c);
  ctx.manifest.params["omega"] = setup.omega;
  ctx.manifest.params["graph"] = recipe.to_json();
  ctx.manifest.seeds.push_back(recipe.seed);

  const auto graph = build_graph(recipe);
  const auto study = study_strategies(graph.graph, setup, c.sim, c.ensemble);
  const std::vector<const CurveStudy*> ptrs{&study.base, &study.better, &study.worse};
  write_curves(ctx, spec.name, ptrs);
  write_curve_plot(ctx, spec.name, 3, "mean C_t under base rates and two strategies");

  ordered_json summary;
  summary["condition"] = {{"S1_beats_S2", to_string(study.condition.s1_beats_s2)},
                          {"S2_beats_S1", to_string(study.condition.s2_beats_s1)},
                          {"S3_beats_S2", to_string(study.condition.s3_beats_s2)}};
  summary["predicted_better"] = to_string(setup.better);
  summary["base"] = curve_summary(study.base);
  summary["better"] = curve_summary(study.better);
  summary["worse"] = curve_summary(study.worse);
  summary["analytic_ranking_holds"] = study.better.analytic_q < study.worse.analytic_q;
  summary["simulated_ranking"] = ordering_summary({&study.better, &study.worse});
  write_json_file(ctx.file(spec.name + "_summary.json"), summary);
  ctx.manifest.summary = summary;
  return ctx.finish();
}

Manifest run_bounds_surface(const ExperimentSpec& spec) {
  Overrides o(spec.overrides, spec.name);
  Common c = read_common(o, Parameters{0.1, 0.1, 0.1, 0.0}, 100, spec.threads);
  const auto graph_type = o.text("graph", "regular");
  GraphRecipe recipe = default_recipe(graph_type);
  recipe.degree = o.count("degree", recipe.degree);
  recipe.edge_prob = o.real("edge_prob", recipe.edge_prob);
  recipe.exponent = o.real("exponent", recipe.exponent);
  const auto fixed = o.text("fixed", "gamma");
  const double fixed_value = o.real("fixed_value", 0.1);
  const auto grid = o.reals("grid", {0.1, 0.2, 0.3, 0.4, 0.5});
  o.finish();
  recipe.n = c.n;
  recipe.seed = c.graph_seed;

  Context ctx(spec);
  ctx.manifest.params = common_json(c);
  ctx.manifest.params["graph"] = recipe.to_json();
  ctx.manifest.params["fixed"] = fixed;
  ctx.manifest.params["fixed_value"] = fixed_value;
  ctx.manifest.params["grid"] = grid;
  ctx.manifest.seeds.push_back(recipe.seed);

  const auto graph = build_graph(recipe);
  const auto surface = bounds_surface(graph.graph, fixed, fixed_value, grid, grid, c.sim, c.ensemble);

  CsvWriter out(ctx.file("bounds_surface.csv"),
                {surface.axis1, surface.axis2, "sim_mean_ct", "sim_se", "lower", "upper", "analytic", "contained"});
  std::size_t contained = 0;
  for (const auto& cell : surface.cells) {
    out.field(cell.x).field(cell.y).field(cell.sim_mean_ct).field(cell.sim_se).field(cell.lower).field(cell.upper)
        .field(cell.analytic).field(cell.contained() ? "true" : "false");
    out.end_row();
    if (cell.contained()) ++contained;
    ctx.manifest.seeds.push_back(cell.seed);
  }
  out.close();
  std::ostringstream gp;
  gp << "# simulated steady-state C_t against the bounds, " << fixed << " = " << fixed_value << "\n"
     << "set datafile separator ','\nset key autotitle columnhead\n"
     << "set xlabel '" << surface.axis1 << "'\nset ylabel '" << surface.axis2 << "'\nset zlabel 'C_t'\n"
     << "set dgrid3d " << grid.size() << "," << grid.size() << "\n"
     << "set terminal pngcairo size 900,600\nset output 'bounds_surface.png'\n"
     << "splot 'bounds_surface.csv' using 1:2:3 with lines title 'simulated', \\\n"
     << "      '' using 1:2:5 with lines title 'lower', \\\n"
     << "      '' using 1:2:6 with lines title 'upper'\n";
  write_text_file(ctx.file("bounds_surface.gp"), gp.str());

  ctx.manifest.summary = {{"cells", surface.cells.size()},
                          {"contained", contained},
                          {"mean_degree", graph.graph.mean_degree()}};
  return ctx.finish();
}

Manifest run_threshold_validation(const ExperimentSpec& spec) {
  Overrides o(spec.overrides, spec.name);
  Common c = read_common(o, Parameters{0.25, 0.002, 0.1, 0.0}, 10, spec.threads);
  const double frac = o.real("c", 0.5);
  const double eps = o.real("epsilon", 0.159);
  const double stated_z = o.real("stated_z", 2.0);
  GraphRecipe recipe = default_recipe(o.text("graph", "random"));
  recipe.edge_prob = o.real("edge_prob", recipe.edge_prob);
  recipe.degree = o.count("degree", recipe.degree);
  recipe.exponent = o.real("exponent", recipe.exponent);
  o.finish();
  recipe.n = c.n;
  recipe.seed = c.graph_seed;

  Context ctx(spec);
  ctx.manifest.params = common_json(c);
  ctx.manifest.params["c"] = frac;
  ctx.manifest.params["epsilon"] = eps;
  ctx.manifest.params["stated_z"] = stated_z;
  ctx.manifest.params["graph"] = recipe.to_json();
  ctx.manifest.seeds.push_back(recipe.seed);

  const auto graph = build_graph(recipe);
  const auto result = threshold_exceedance(graph.graph, c.sim, frac, eps, c.ensemble);
  ctx.add_seeds(result.ensemble);
  const auto stated = threshold_check_with_z(c.params, empirical_distribution(graph.graph), graph.graph.node_count(),
                                             frac, stated_z);

  CsvWriter scatter(ctx.file("threshold_ct.csv"), {"run", "t", "ct", "limit"});
  const double limit = frac * static_cast<double>(graph.graph.node_count());
  for (std::size_t r = 0; r < result.ensemble.runs.size(); ++r) {
    const auto& run = result.ensemble.runs[r];
    for (std::size_t k = 0; k < run.ct_samples.size(); ++k) {
      if (result.ensemble.sample_times[k] < c.sim.burn_in) continue;
      scatter.field(r).field(result.ensemble.sample_times[k]).field(run.ct_samples[k]).field(limit);
      scatter.end_row();
    }
  }
  scatter.close();
  write_text_file(ctx.file("threshold_validation.gp"),
                  "# C_t samples from every run against the threshold c * n\n"
                  "set datafile separator ','\nset key autotitle columnhead\n"
                  "set xlabel 'time'\nset ylabel 'C_t'\n"
                  "set terminal pngcairo size 900,600\nset output 'threshold_validation.png'\n"
                  "plot 'threshold_ct.csv' using 2:3 with points pointtype 7 pointsize 0.3 title 'C_t', \\\n"
                  "     '' using 2:4 with lines title 'c n'\n");

  auto verdict_json = [](const ThresholdVerdict& v) {
    return ordered_json{{"z", v.z},
                        {"rhs", v.rhs},
                        {"lambda", v.lambda},
                        {"lower", v.lower},
                        {"upper", v.upper},
                        {"sufficient_holds", v.sufficient_holds},
                        {"sufficient_sharp_holds", v.sufficient_sharp_holds},
                        {"necessary_holds", v.necessary_holds}};
  };
  ordered_json summary;
  summary["exceed_fraction"] = result.exceed_fraction;
  summary["samples"] = result.samples;
  summary["exceeding"] = result.exceeding;
  summary["within_epsilon"] = result.exceed_fraction <= eps;
  summary["verdict_computed_z"] = verdict_json(result.verdict);
  summary["verdict_stated_z"] = verdict_json(stated);
  summary["steady_mean_ct"] = result.ensemble.steady_mean_ct;
  write_json_file(ctx.file("threshold_summary.json"), summary);
  ctx.manifest.summary = summary;
  return ctx.finish();
}

} // namespace

Manifest run_experiment(const ExperimentSpec& spec) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), spec.name) == names.end())
    throw InputError("unknown experiment '" + spec.name + "'");
  if (spec.output_dir.empty()) throw InputError("experiment needs an output directory");
  if (spec.name == "stability") return run_stability(spec);
  if (spec.name == "topology_regular") return run_topology(spec, "regular");
  if (spec.name == "topology_random") return run_topology(spec, "random");
  if (spec.name == "topology_powerlaw") return run_topology(spec, "powerlaw");
  if (spec.name == "bounds_surface") return run_bounds_surface(spec);
  if (spec.name == "threshold_validation") return run_threshold_validation(spec);
  return run_strategies(spec);
}

} // namespace vgsec
