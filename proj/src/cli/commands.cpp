#include "vgsec/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "vgsec/degree_distribution.hpp"
#include "vgsec/ensemble.hpp"
#include "vgsec/errors.hpp"
#include "vgsec/experiments.hpp"
#include "vgsec/fixed_point.hpp"
#include "vgsec/generators.hpp"
#include "vgsec/graph_io.hpp"
#include "vgsec/output.hpp"
#include "vgsec/steady_state.hpp"
#include "vgsec/stochastic_order.hpp"
#include "vgsec/strategies.hpp"
#include "vgsec/threshold.hpp"

namespace vgsec {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// A problem with the flags themselves, reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

struct Input {
  std::string source;
  DegreeDistribution dist;
  std::optional<std::size_t> n; // node count when the input implies one
};

// Degree law of a graph file, or of a distribution JSON when the path ends in .json.
Input load_empirical(const std::string& source, const std::filesystem::path& path) {
  if (path.extension() == ".json") return Input{source, load_distribution(path), std::nullopt};
  const auto graph = load_graph(path);
  return Input{source, empirical_distribution(graph), graph.node_count()};
}

// regular:g | random:n:r | powerlaw:l:nu:n | empirical:PATH
Input parse_dist_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("distribution spec '" + spec + "' has no ':'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "empirical") {
    if (rest.empty()) throw UsageError("empirical spec needs a path");
    return load_empirical(spec, rest);
  }
  std::vector<std::string> parts;
  std::stringstream ss(rest);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (!rest.empty() && rest.back() == ':') parts.emplace_back();
  auto expect = [&](std::size_t count) {
    if (parts.size() != count)
      throw UsageError("distribution spec '" + spec + "' needs " + std::to_string(count) + " field(s) after '" +
                       kind + ":'");
  };
  try {
    if (kind == "regular") {
      expect(1);
      return Input{spec, DegreeDistribution::regular(parse_number<std::size_t>(parts[0], "degree")), std::nullopt};
    }
    if (kind == "random") {
      expect(2);
      const auto n = parse_number<std::size_t>(parts[0], "node count");
      return Input{spec, DegreeDistribution::random(n, parse_number<double>(parts[1], "edge probability")), n};
    }
    if (kind == "powerlaw") {
      expect(3);
      const auto l = parse_number<std::size_t>(parts[0], "minimum degree");
      const auto nu = parse_number<double>(parts[1], "exponent");
      const auto n = parse_number<std::size_t>(parts[2], "node count");
      return Input{spec, DegreeDistribution::power_law(l, nu, n), n};
    }
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown distribution kind '" + kind + "'");
}

ordered_json rates_json(const Parameters& p) {
  return ordered_json{{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"eta", p.eta}};
}

ordered_json input_json(const Input& in) {
  ordered_json j{{"source", in.source}, {"kind", in.dist.kind_name()}, {"mean_degree", in.dist.mean()}};
  if (in.n) j["n"] = *in.n;
  return j;
}

void add_rates(CLI::App* sub, Parameters& p) {
  sub->add_option("--alpha", p.alpha, "compromise rate")->capture_default_str();
  sub->add_option("--beta", p.beta, "detection recovery rate")->capture_default_str();
  sub->add_option("--gamma", p.gamma, "per-neighbor spread rate")->capture_default_str();
  sub->add_option("--eta", p.eta, "other recovery rate")->capture_default_str();
}

struct InputFlags {
  std::vector<std::string> dists;
  std::vector<std::string> graphs;
  CLI::Option* dist = nullptr;
  CLI::Option* graph = nullptr;
};

void add_input(CLI::App* sub, InputFlags& flags, std::size_t count) {
  flags.dist = sub->add_option("--dist", flags.dists, "degree law: regular:g, random:n:r, powerlaw:l:nu:n, empirical:PATH");
  flags.graph = sub->add_option("--graph", flags.graphs, "graph file whose empirical degree law is used");
  flags.dist->expected(0, static_cast<int>(count))->allow_extra_args(false);
  flags.graph->expected(0, static_cast<int>(count))->allow_extra_args(false);
}

// Inputs in command-line order.
std::vector<Input> resolve_inputs(CLI::App* sub, const InputFlags& flags, std::size_t count) {
  std::vector<std::string> specs;
  std::size_t di = 0;
  std::size_t gi = 0;
  for (const auto* opt : sub->parse_order()) {
    if (opt == flags.dist && di < flags.dists.size()) specs.push_back(flags.dists[di++]);
    if (opt == flags.graph && gi < flags.graphs.size()) specs.push_back("graph:" + flags.graphs[gi++]);
  }
  if (specs.size() != count)
    throw UsageError("expected " + std::to_string(count) + " input(s) from --dist/--graph, got " +
                     std::to_string(specs.size()));
  std::vector<Input> inputs;
  for (const auto& s : specs) {
    if (s.starts_with("graph:"))
      inputs.push_back(load_empirical(s.substr(6), s.substr(6)));
    else
      inputs.push_back(parse_dist_spec(s));
  }
  return inputs;
}

ordered_json solve_json(const Parameters& p, const DegreeDistribution& dist) {
  const auto r = solve_q(p, dist);
  return ordered_json{{"q", r.q}, {"lower", r.lower}, {"upper", r.upper}, {"residual", r.residual},
                      {"iterations", r.iterations}};
}

ordered_json verdict_json(const ThresholdVerdict& v) {
  return ordered_json{{"sufficient_holds", v.sufficient_holds},
                      {"sufficient_sharp_holds", v.sufficient_sharp_holds},
                      {"necessary_holds", v.necessary_holds},
                      {"z", v.z},
                      {"rhs", v.rhs},
                      {"lambda", v.lambda},
                      {"lower", v.lower},
                      {"upper", v.upper}};
}

std::string json_to_flag_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Inserts config-file values right after the subcommand name for every flag
// the command line does not already carry, so explicit flags win.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].starts_with("--config=")) path = args[i].substr(9);
  }
  if (!path || args.empty() || args[0].starts_with("-")) return args;

  std::ifstream in(*path);
  if (!in) throw UsageError("cannot read config file '" + *path + "'");
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw UsageError("config file '" + *path + "' is not valid JSON: " + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");

  std::vector<std::string> injected;
  for (const auto& [key, value] : cfg.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (flag == "--config") throw UsageError("config file may not name another config file");
    const bool present = std::any_of(args.begin() + 1, args.end(), [&](const std::string& a) {
      return a == flag || a.starts_with(flag + "=");
    });
    if (present) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) injected.push_back(flag);
    } else if (value.is_array()) {
      for (const auto& v : value) {
        injected.push_back(flag);
        injected.push_back(json_to_flag_value(v));
      }
    } else if (value.is_object()) {
      injected.push_back(flag);
      injected.push_back(value.dump());
    } else {
      injected.push_back(flag);
      injected.push_back(json_to_flag_value(value));
    }
  }
  args.insert(args.begin() + 1, injected.begin(), injected.end());
  return args;
}

void write_error(std::ostream& err, std::string_view kind, std::string_view message, int code) {
  ordered_json j{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
  err << j.dump() << "\n";
}

struct GenFlags {
  std::string type;
  std::size_t n = 0;
  std::optional<std::size_t> degree;
  std::optional<double> edge_prob;
  std::optional<double> exponent;
  std::optional<std::size_t> min_degree;
  Seed seed = 0;
  std::string out;
};

ordered_json cmd_gen(const GenFlags& f) {
  GraphRecipe recipe;
  recipe.type = f.type;
  recipe.n = f.n;
  recipe.seed = f.seed;
  ordered_json config{{"type", f.type}, {"n", f.n}};
  if (f.type == "regular") {
    if (!f.degree) throw UsageError("gen --type regular requires --degree");
    recipe.degree = *f.degree;
    config["degree"] = *f.degree;
  } else if (f.type == "random") {
    if (!f.edge_prob) throw UsageError("gen --type random requires --edge-prob");
    if (!(*f.edge_prob >= 0.0 && *f.edge_prob <= 1.0)) throw UsageError("--edge-prob must lie in [0, 1]");
    recipe.edge_prob = *f.edge_prob;
    config["edge_prob"] = *f.edge_prob;
  } else {
    if (!f.exponent || !f.min_degree) throw UsageError("gen --type powerlaw requires --exponent and --min-degree");
    recipe.exponent = *f.exponent;
    recipe.min_degree = *f.min_degree;
    config["exponent"] = *f.exponent;
    config["min_degree"] = *f.min_degree;
  }
  if (f.n == 0) throw UsageError("--n must be >= 1");
  config["seed"] = f.seed;
  config["out"] = f.out;

  const auto generated = build_graph(recipe);
  save_graph(f.out, generated.graph);
  ordered_json result{{"node_count", generated.graph.node_count()},
                      {"edge_count", generated.graph.edge_count()},
                      {"mean_degree", generated.graph.mean_degree()},
                      {"attempts", generated.report.attempts},
                      {"dropped_stubs", generated.report.dropped_stubs}};
  result["parity_adjusted"] =
      generated.report.parity_adjusted ? json(*generated.report.parity_adjusted) : json(nullptr);
  return ordered_json{{"command", "gen"}, {"config", config}, {"result", result}};
}

ordered_json cmd_solve(const Input& in, const Parameters& p) {
  ordered_json config{{"input", input_json(in)}, {"rates", rates_json(p)}};
  auto result = solve_json(p, in.dist);
  if (in.n) {
    const auto c = expected_compromised(p, in.dist, *in.n);
    result["expected_compromised"] = {{"lo", c.lo}, {"point", c.point}, {"hi", c.hi}};
  }
  return ordered_json{{"command", "solve"}, {"config", config}, {"result", result}};
}

OrderVerdict order_inputs(const Input& a, const Input& b) {
  const auto& ka = a.dist.kind();
  const auto& kb = b.dist.kind();
  if (a.dist.is_empirical() || b.dist.is_empirical()) return stochastic_order(a.dist, b.dist);
  if (ka.index() == kb.index() && !std::holds_alternative<RegularSpec>(ka)) return order_same_family(a.dist, b.dist);
  const bool a_pl = std::holds_alternative<PowerLawSpec>(ka);
  const bool b_pl = std::holds_alternative<PowerLawSpec>(kb);
  if (a_pl != b_pl) {
    const auto& pl = std::get<PowerLawSpec>(a_pl ? ka : kb);
    const auto& other = a_pl ? kb : ka;
    const std::size_t n = std::holds_alternative<RandomSpec>(other) ? std::get<RandomSpec>(other).n : pl.n;
    return order_cross_family(a.dist, b.dist, n);
  }
  if (ka.index() == kb.index()) return order_same_family(a.dist, b.dist);
  return stochastic_order(a.dist, b.dist);
}

ordered_json cmd_compare(const std::vector<Input>& in, const Parameters& p) {
  ordered_json config{{"first", input_json(in[0])}, {"second", input_json(in[1])}, {"rates", rates_json(p)}};
  const auto verdict = order_inputs(in[0], in[1]);
  const auto tabulated = stochastic_order(in[0].dist, in[1].dist);
  const double q1 = solve_q(p, in[0].dist).q;
  const double q2 = solve_q(p, in[1].dist).q;

  ordered_json result;
  result["relation"] = to_string(verdict.relation);
  result["witness"] = verdict.witness ? json(*verdict.witness) : json(nullptr);
  result["basis"] = to_string(verdict.basis);
  result["rule_overridden"] = verdict.rule_overridden;
  result["tabulated_relation"] = to_string(tabulated.relation);
  result["q_first"] = q1;
  result["q_second"] = q2;
  switch (verdict.relation) {
  case Relation::LE:
    result["implication"] = "q_first <= q_second";
    result["implication_holds"] = q1 <= q2;
    break;
  case Relation::GE:
    result["implication"] = "q_first >= q_second";
    result["implication_holds"] = q1 >= q2;
    break;
  case Relation::EQ:
    result["implication"] = "q_first == q_second";
    result["implication_holds"] = q1 == q2;
    break;
  case Relation::Incomparable:
    result["implication"] = nullptr;
    result["implication_holds"] = nullptr;
    break;
  }
  return ordered_json{{"command", "compare"}, {"config", config}, {"result", result}};
}

ordered_json cmd_strategies(const Input& in, const Parameters& p, double omega) {
  ordered_json config{{"input", input_json(in)}, {"rates", rates_json(p)}, {"omega", omega}};
  const auto cond = strategy_condition(p, in.dist, omega);
  ordered_json result;
  result["S1_beats_S2"] = to_string(cond.s1_beats_s2);
  result["S2_beats_S1"] = to_string(cond.s2_beats_s1);
  result["S3_beats_S2"] = to_string(cond.s3_beats_s2);
  result["q_base"] = solve_q(p, in.dist).q;

  std::vector<std::pair<double, std::string>> ranked;
  ordered_json per = ordered_json::object();
  for (auto s : {Strategy::RaiseDetection, Strategy::LowerCompromise, Strategy::LowerSpread}) {
    const std::string name(to_string(s));
    try {
      const auto modified = strategy_apply(p, s, omega);
      const double q = solve_q(modified, in.dist).q;
      per[name] = {{"rates", rates_json(modified)}, {"q", q}};
      ranked.emplace_back(q, name);
    } catch (const DomainError& e) {
      per[name] = {{"rates", nullptr}, {"q", nullptr}, {"reason", e.what()}};
    }
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](auto& a, auto& b) { return a.first < b.first; });
  result["strategies"] = per;
  result["ranking"] = ordered_json::array();
  for (const auto& r : ranked) result["ranking"].push_back(r.second);
  return ordered_json{{"command", "strategies"}, {"config", config}, {"result", result}};
}

ordered_json cmd_threshold(const Input& in, const Parameters& p, std::optional<std::size_t> n_flag, double c,
                           double eps, std::optional<double> z) {
  const auto n = n_flag ? n_flag : in.n;
  if (!n) throw UsageError("threshold needs --n when the input does not fix the node count");
  if (!(c > 0.0 && c < 1.0)) throw UsageError("--c must lie in (0, 1)");
  if (!(eps > 0.0 && eps < 1.0)) throw UsageError("--epsilon must lie in (0, 1)");
  ordered_json config{{"input", input_json(in)}, {"rates", rates_json(p)}, {"n", *n}, {"c", c}, {"epsilon", eps}};
  config["z"] = z ? json(*z) : json(nullptr);
  const auto verdict = z ? threshold_check_with_z(p, in.dist, *n, c, *z) : threshold_check(p, in.dist, *n, c, eps);
  auto result = verdict_json(verdict);
  result["q"] = solve_q(p, in.dist).q;
  return ordered_json{{"command", "threshold"}, {"config", config}, {"result", result}};
}

struct SimFlags {
  std::string graph;
  Parameters params;
  std::size_t runs = 1;
  Seed seed = 0;
  double horizon = 330.0;
  double burn_in = 30.0;
  double sample_interval = 1.0;
  double window = 20.0;
  std::optional<std::size_t> windows;
  std::size_t threads = 0;
  std::vector<NodeId> initial;
  std::string out_dir;
};

ordered_json cmd_simulate(const SimFlags& f) {
  if (f.runs == 0) throw UsageError("--runs must be >= 1");
  if (!(f.window > 0.0)) throw UsageError("--window must be positive");
  const auto graph = load_graph(f.graph);
  SimConfig sim;
  sim.params = f.params;
  sim.horizon = f.horizon;
  sim.burn_in = f.burn_in;
  sim.sample_interval = f.sample_interval;
  sim.initial_compromised = f.initial;
  try {
    sim.validate(graph.node_count());
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  EnsembleOptions opts;
  opts.runs = f.runs;
  opts.base_seed = f.seed;
  opts.window = f.window;
  opts.threads = f.threads;
  const double span = std::max(0.0, f.horizon - f.burn_in);
  opts.n_windows = f.windows ? *f.windows : std::min<std::size_t>(15, static_cast<std::size_t>(span / f.window + 1e-9));
  if (opts.n_windows == 1) opts.n_windows = 0;

  ordered_json config{{"graph", f.graph},
                      {"node_count", graph.node_count()},
                      {"rates", rates_json(f.params)},
                      {"runs", f.runs},
                      {"seed", f.seed},
                      {"horizon", f.horizon},
                      {"burn_in", f.burn_in},
                      {"sample_interval", f.sample_interval},
                      {"window", f.window},
                      {"windows", opts.n_windows},
                      {"initial", f.initial}};
  config["out_dir"] = f.out_dir.empty() ? json(nullptr) : json(f.out_dir);

  const auto ens = run_ensemble(graph, sim, opts);
  const auto dist = empirical_distribution(graph);
  ordered_json result;
  result["q_bar"] = ens.q_bar;
  result["steady_mean_ct"] = ens.steady_mean_ct;
  result["steady_mean_ct_se"] = ens.steady_mean_ct_se;
  if (f.params.alpha > 0.0 && f.params.recovery_rate() > 0.0) {
    const auto s = solve_q(f.params, dist);
    result["analytic_q"] = s.q;
    result["lower"] = s.lower;
    result["upper"] = s.upper;
  }
  result["runs"] = ordered_json::array();
  for (const auto& r : ens.runs)
    result["runs"].push_back({{"seed", r.seed}, {"events", r.event_count}, {"steady_mean_ct", r.steady_mean_ct}});

  if (!f.out_dir.empty()) {
    const std::filesystem::path dir(f.out_dir);
    std::filesystem::create_directories(dir);
    SimConfig first = sim;
    first.seed = run_seed(f.seed, 0);
    const auto traj = simulate(graph, first);
    CsvWriter events(dir / "trajectory.csv", {"t", "node", "state"});
    for (NodeId v : traj.initial_compromised) {
      events.field(0.0).field(v).field("compromised");
      events.end_row();
    }
    for (const auto& e : traj.events) {
      events.field(e.time).field(e.node).field(e.state == NodeState::Compromised ? "compromised" : "secure");
      events.end_row();
    }
    events.close();
    CsvWriter ct(dir / "ct.csv", {"t", "ct"});
    for (std::size_t k = 0; k < ens.sample_times.size(); ++k) {
      ct.field(ens.sample_times[k]).field(ens.mean_ct[k]);
      ct.end_row();
    }
    ct.close();
    ordered_json est;
    est["q_bar"] = ens.q_bar;
    est["q_i"] = ens.q_i_mean;
    est["q_i_run_stddev"] = ens.q_i_run_stddev;
    est["n_windows"] = ens.n_windows;
    est["q_i_window_stddev"] = ens.q_i_window_stddev;
    write_json_file(dir / "estimates.json", est);
    result["files"] = {"trajectory.csv", "ct.csv", "estimates.json"};
  }
  return ordered_json{{"command", "simulate"}, {"config", config}, {"result", result}};
}

struct ExperimentFlags {
  std::string name;
  std::string out_dir;
  Seed seed = 0;
  std::size_t threads = 0;
  std::string overrides = "{}";
  std::vector<std::string> sets;
};

ordered_json cmd_experiment(const ExperimentFlags& f) {
  json overrides;
  try {
    overrides = json::parse(f.overrides);
  } catch (const json::exception& e) {
    throw UsageError(std::string("--overrides is not valid JSON: ") + e.what());
  }
  if (!overrides.is_object()) throw UsageError("--overrides must be a JSON object");
  for (const auto& s : f.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--set expects key=value, got '" + s + "'");
    try {
      overrides[s.substr(0, eq)] = json::parse(s.substr(eq + 1));
    } catch (const json::exception&) {
      overrides[s.substr(0, eq)] = s.substr(eq + 1);
    }
  }
  if (overrides.contains("base_seed")) throw UsageError("use --seed instead of a base_seed override");
  overrides["base_seed"] = f.seed;
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), f.name) == names.end()) throw UsageError("unknown experiment '" + f.name + "'");

  ExperimentSpec spec{f.name, overrides, f.out_dir, f.threads};
  ordered_json config{{"name", f.name}, {"out_dir", f.out_dir}, {"seed", f.seed}, {"overrides", overrides}};
  Manifest manifest;
  try {
    manifest = run_experiment(spec);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  return ordered_json{{"command", "experiment"}, {"config", config}, {"result", manifest.to_json()}};
}

} // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Security analysis of vulnerability graphs", "vgsec"};
  app.require_subcommand(1);
  std::string config_path;

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph file");
  gen_cmd->add_option("--type", gen.type)->required()->check(CLI::IsMember({"regular", "random", "powerlaw"}));
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--degree", gen.degree);
  gen_cmd->add_option("--edge-prob", gen.edge_prob);
  gen_cmd->add_option("--exponent", gen.exponent);
  gen_cmd->add_option("--min-degree", gen.min_degree);
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--out", gen.out)->required();

  Parameters solve_p;
  InputFlags solve_in;
  auto* solve_cmd = app.add_subcommand("solve", "steady-state compromise probability and bounds");
  add_input(solve_cmd, solve_in, 1);
  add_rates(solve_cmd, solve_p);

  Parameters compare_p;
  InputFlags compare_in;
  auto* compare_cmd = app.add_subcommand("compare", "stochastic order of two degree laws");
  add_input(compare_cmd, compare_in, 2);
  add_rates(compare_cmd, compare_p);

  Parameters strat_p;
  InputFlags strat_in;
  double omega = 0.0;
  auto* strat_cmd = app.add_subcommand("strategies", "compare the three defense adjustments");
  add_input(strat_cmd, strat_in, 1);
  add_rates(strat_cmd, strat_p);
  strat_cmd->add_option("--omega", omega)->required();

  Parameters thr_p;
  InputFlags thr_in;
  std::optional<std::size_t> thr_n;
  double thr_c = 0.5;
  double thr_eps = 0.159;
  std::optional<double> thr_z;
  auto* thr_cmd = app.add_subcommand("threshold", "conditions for Pr[C_t <= c n] >= 1 - epsilon");
  add_input(thr_cmd, thr_in, 1);
  add_rates(thr_cmd, thr_p);
  thr_cmd->add_option("--n", thr_n, "node count (defaults to the input's)");
  thr_cmd->add_option("--c", thr_c)->capture_default_str();
  thr_cmd->add_option("--epsilon", thr_eps)->capture_default_str();
  thr_cmd->add_option("--z", thr_z, "use this quantile instead of the one computed from epsilon");

  SimFlags sim;
  auto* sim_cmd = app.add_subcommand("simulate", "ensemble of continuous-time simulations on a graph");
  sim_cmd->add_option("--graph", sim.graph)->required();
  add_rates(sim_cmd, sim.params);
  sim_cmd->add_option("--runs", sim.runs)->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed)->required();
  sim_cmd->add_option("--horizon", sim.horizon)->capture_default_str();
  sim_cmd->add_option("--burn-in", sim.burn_in)->capture_default_str();
  sim_cmd->add_option("--sample-interval", sim.sample_interval)->capture_default_str();
  sim_cmd->add_option("--window", sim.window)->capture_default_str();
  sim_cmd->add_option("--windows", sim.windows, "number of stability windows (default: as many as fit, up to 15)");
  sim_cmd->add_option("--threads", sim.threads, "worker threads, 0 for all cores")->capture_default_str();
  sim_cmd->add_option("--initial", sim.initial, "initially compromised node ids");
  sim_cmd->add_option("--out-dir", sim.out_dir, "write trajectory.csv, ct.csv and estimates.json here");

  ExperimentFlags exp;
  auto* exp_cmd = app.add_subcommand("experiment", "reproduce one of the evaluation studies");
  exp_cmd->add_option("--name", exp.name)->required();
  exp_cmd->add_option("--out-dir", exp.out_dir)->required();
  exp_cmd->add_option("--seed", exp.seed)->required();
  exp_cmd->add_option("--threads", exp.threads)->capture_default_str();
  exp_cmd->add_option("--overrides", exp.overrides, "JSON object of study settings")->capture_default_str();
  exp_cmd->add_option("--set", exp.sets, "single override as key=value");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->add_option("--config", config_path, "JSON file of flag values; explicit flags take precedence");

  try {
    auto args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    write_error(err, "usage", e.what(), kExitUsage);
    return kExitUsage;
  } catch (const UsageError& e) {
    write_error(err, "usage", e.what(), kExitUsage);
    return kExitUsage;
  }

  try {
    ordered_json doc;
    if (gen_cmd->parsed()) {
      doc = cmd_gen(gen);
    } else if (solve_cmd->parsed()) {
      doc = cmd_solve(resolve_inputs(solve_cmd, solve_in, 1)[0], solve_p);
    } else if (compare_cmd->parsed()) {
      doc = cmd_compare(resolve_inputs(compare_cmd, compare_in, 2), compare_p);
    } else if (strat_cmd->parsed()) {
      doc = cmd_strategies(resolve_inputs(strat_cmd, strat_in, 1)[0], strat_p, omega);
    } else if (thr_cmd->parsed()) {
      doc = cmd_threshold(resolve_inputs(thr_cmd, thr_in, 1)[0], thr_p, thr_n, thr_c, thr_eps, thr_z);
    } else if (sim_cmd->parsed()) {
      doc = cmd_simulate(sim);
    } else {
      doc = cmd_experiment(exp);
    }
    if (!config_path.empty()) doc["config"]["config_file"] = config_path;
    out << doc.dump(2) << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    write_error(err, "usage", e.what(), kExitUsage);
    return kExitUsage;
  } catch (const DomainError& e) {
    write_error(err, "domain", e.what(), kExitFailure);
  } catch (const ConstructionError& e) {
    write_error(err, "construction", e.what(), kExitFailure);
  } catch (const InputError& e) {
    write_error(err, "input", e.what(), kExitFailure);
  } catch (const std::exception& e) {
    write_error(err, "failure", e.what(), kExitFailure);
  }
  return kExitFailure;
}

} // namespace vgsec
