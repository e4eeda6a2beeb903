// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance_tests            run every criterion
//   acceptance_tests 3 5        run the listed criteria
//
// VGSEC_POWERLAW=1 adds the long power-law topology ordering run to criterion 5.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "vgsec/cli.hpp"
#include "vgsec/degree_distribution.hpp"
#include "vgsec/ensemble.hpp"
#include "vgsec/exact_ctmc.hpp"
#include "vgsec/experiments.hpp"
#include "vgsec/fixed_point.hpp"
#include "vgsec/normal.hpp"
#include "vgsec/stochastic_order.hpp"
#include "vgsec/strategies.hpp"
#include "vgsec/threshold.hpp"

using namespace vgsec;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool env_flag(const char* name) {
  const char* v = std::getenv(name);
  return v != nullptr && std::string(v) == "1";
}

// Difference b - a measured against the standard error of the difference.
bool separated(const EnsembleResult& a, const EnsembleResult& b, double* z = nullptr) {
  const double se = std::hypot(a.steady_mean_ct_se, b.steady_mean_ct_se);
  const double gap = b.steady_mean_ct - a.steady_mean_ct;
  if (z) *z = se > 0.0 ? gap / se : (gap > 0.0 ? INFINITY : 0.0);
  return gap > 0.0 && gap >= 2.0 * se;
}

VulnerabilityGraph default_graph(const std::string& type, std::size_t n = 2000) {
  GraphRecipe r = default_recipe(type);
  r.n = n;
  return build_graph(r).graph;
}

// 1. Simulated per-node marginals on tiny graphs against the exact chain.
Outcome criterion_1() {
  std::vector<std::pair<std::string, VulnerabilityGraph>> graphs;
  for (std::size_t n = 2; n <= 5; ++n) graphs.emplace_back(fmt::format("path{}", n), oracle::path(n));
  for (std::size_t n = 3; n <= 5; ++n) graphs.emplace_back(fmt::format("cycle{}", n), oracle::cycle(n));
  for (std::size_t n = 4; n <= 5; ++n) graphs.emplace_back(fmt::format("star{}", n), oracle::star(n));
  for (std::size_t n = 4; n <= 5; ++n) graphs.emplace_back(fmt::format("complete{}", n), oracle::complete(n));

  Rng rng(2024);
  std::vector<Parameters> params;
  for (int i = 0; i < 10; ++i)
    params.push_back({0.05 + 0.45 * rng.uniform(), 0.05 + 0.45 * rng.uniform(), 0.05 + 0.45 * rng.uniform(), 0.0});

  double worst = 0.0;
  std::string where;
  std::size_t cells = 0;
  for (const auto& [name, g] : graphs) {
    for (std::size_t i = 0; i < params.size(); ++i) {
      const auto exact = exact_stationary(g, params[i]);
      SimConfig cfg;
      cfg.params = params[i];
      cfg.horizon = 1e5;
      cfg.burn_in = 100.0;
      cfg.sample_interval = 1000.0;
      EnsembleOptions opts;
      opts.runs = 20;
      opts.base_seed = derive_seed(7, cells++);
      opts.n_windows = 0;
      const auto ens = run_ensemble(g, cfg, opts);
      for (std::size_t v = 0; v < g.node_count(); ++v) {
        const double err = std::abs(ens.q_i_mean[v] - exact.marginals[v]);
        if (err > worst) {
          worst = err;
          where = fmt::format("{} params#{} node {}", name, i, v);
        }
      }
    }
  }
  return {worst <= 0.02, fmt::format("{} graphs x {} rate sets, worst |q_sim - q_exact| = {:.4f} at {} (tol 0.02)",
                                     graphs.size(), params.size(), worst, where)};
}

// 2. Degenerate closed forms of the fixed point.
Outcome criterion_2() {
  Rng rng(5);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Parameters p{0.01 + rng.uniform(), 0.01 + rng.uniform(), rng.uniform(), 0.2 * rng.uniform()};
    const double closed = p.alpha / (p.alpha + p.beta + p.eta);
    worst = std::max(worst, std::abs(solve_q(p, DegreeDistribution::regular(0)).q - closed));
    p.gamma = 0.0;
    const DegreeDistribution laws[] = {DegreeDistribution::regular(1 + rng.below(20)),
                                       DegreeDistribution::random(100 + rng.below(2000), 0.01 * rng.uniform()),
                                       DegreeDistribution::power_law(1 + rng.below(3), 1.0 + rng.uniform(), 500)};
    for (const auto& d : laws) worst = std::max(worst, std::abs(solve_q(p, d).q - closed));
  }
  return {worst <= 1e-9, fmt::format("800 cases, worst |q - alpha/(alpha+beta+eta)| = {:.3e} (tol 1e-9)", worst)};
}

// 3. Simulated steady-state C_t within the bounds on the full 5x5 grids.
Outcome criterion_3() {
  const std::vector<double> grid{0.1, 0.2, 0.3, 0.4, 0.5};
  const std::size_t n = 500;
  std::vector<std::pair<std::string, VulnerabilityGraph>> graphs;
  GraphRecipe r = default_recipe("regular");
  r.n = n;
  graphs.emplace_back("regular(5)", build_graph(r).graph);
  r = default_recipe("random");
  r.n = n;
  r.edge_prob = 0.008;
  graphs.emplace_back("random(0.008)", build_graph(r).graph);
  r = default_recipe("powerlaw");
  r.n = n;
  graphs.emplace_back(r.label(), build_graph(r).graph);

  SimConfig cfg;
  EnsembleOptions opts;
  opts.runs = 30;
  std::size_t cells = 0, contained = 0;
  std::string misses;
  std::size_t k = 0;
  for (const auto& [name, g] : graphs) {
    for (const char* fixed : {"gamma", "beta", "alpha"}) {
      opts.base_seed = derive_seed(99, k++);
      const auto s = bounds_surface(g, fixed, 0.1, grid, grid, cfg, opts);
      for (const auto& c : s.cells) {
        ++cells;
        if (c.contained(1.0)) {
          ++contained;
        } else if (misses.size() < 400) {
          misses += fmt::format(" [{} {}={} {}={} {}={}: sim {:.2f}+-{:.2f} not in [{:.2f}, {:.2f}]]", name, s.axis1,
                                c.x, s.axis2, c.y, fixed, 0.1, c.sim_mean_ct, c.sim_se, c.lower, c.upper);
        }
      }
    }
  }
  return {contained == cells,
          fmt::format("n=500, 3 graphs x 3 planes x 25 cells x 30 runs: {}/{} cells contained (1 SE slack){}",
                      contained, cells, misses)};
}

// 4. Per-node window standard deviations on the three default graphs.
Outcome criterion_4() {
  const Parameters p{0.05, 0.2, 0.1, 0.0};
  bool pass = true;
  std::string detail = "fraction of nodes with window stddev < 0.03:";
  std::size_t k = 0;
  for (const char* type : {"regular", "random", "powerlaw"}) {
    const auto g = default_graph(type);
    EnsembleOptions opts;
    opts.base_seed = derive_seed(4, k++);
    const auto s = study_curve(type, g, p, SimConfig{}, opts);
    const auto& sd = s.ensemble.q_i_window_stddev;
    const auto below = std::count_if(sd.begin(), sd.end(), [](double x) { return x < 0.03; });
    const double frac = static_cast<double>(below) / static_cast<double>(sd.size());
    pass = pass && frac >= 0.9;
    detail += fmt::format(" {} {:.4f} (mu {:.3f});", type, frac, g.mean_degree());
  }
  return {pass, detail + " need >= 0.9 each"};
}

// 5. Strict topology ordering of the steady-state mean C_t.
Outcome criterion_5() {
  const Parameters p{0.05, 0.2, 0.1, 0.0};
  bool pass = true;
  std::string detail;
  auto chain = [&](const std::string& label, const std::vector<GraphRecipe>& recipes, Seed seed) {
    std::vector<EnsembleResult> res;
    for (std::size_t i = 0; i < recipes.size(); ++i) {
      EnsembleOptions opts;
      opts.base_seed = derive_seed(seed, i);
      opts.n_windows = 0;
      SimConfig cfg;
      cfg.params = p;
      res.push_back(run_ensemble(build_graph(recipes[i]).graph, cfg, opts));
    }
    detail += label + ":";
    for (std::size_t i = 0; i + 1 < res.size(); ++i) {
      double z = 0.0;
      const bool ok = separated(res[i], res[i + 1], &z);
      pass = pass && ok;
      detail += fmt::format(" {} < {} by {:.1f} SE{};", recipes[i].label(), recipes[i + 1].label(), z, ok ? "" : " (FAILED)");
    }
    detail += " ";
  };

  std::vector<GraphRecipe> regular, random;
  for (std::size_t g : {2, 3, 4}) {
    GraphRecipe r = default_recipe("regular");
    r.degree = g;
    regular.push_back(r);
  }
  for (double e : {0.001, 0.002, 0.003}) {
    GraphRecipe r = default_recipe("random");
    r.edge_prob = e;
    random.push_back(r);
  }
  chain("regular", regular, 51);
  chain("random", random, 52);

  // Desk-scale substitute for the power-law family: q strictly decreasing in
  // the exponent at fixed minimum degree and node count.
  bool mono = true;
  double prev = 1.0;
  for (double nu = 1.40; nu <= 2.00 + 1e-12; nu += 0.005) {
    const double q = solve_q(p, DegreeDistribution::power_law(2, nu, 2000)).q;
    mono = mono && q < prev;
    prev = q;
  }
  pass = pass && mono;
  detail += fmt::format("solve_q strictly decreasing over nu in [1.40, 2.00] at l=2, n=2000: {}", mono ? "yes" : "NO");

  if (env_flag("VGSEC_POWERLAW")) {
    const auto found = find_power_law_graphs(2000, 2, {1.95, 1.90, 1.85}, 3.34, 3.37, 3000, 1);
    std::vector<EnsembleResult> res;
    for (std::size_t i = 0; i < found.size(); ++i) {
      EnsembleOptions opts;
      opts.runs = 2000;
      opts.base_seed = derive_seed(53, i);
      opts.n_windows = 0;
      SimConfig cfg;
      cfg.params = p;
      res.push_back(run_ensemble(found[i].graph.graph, cfg, opts));
    }
    detail += "; powerlaw (2000 runs):";
    for (std::size_t i = 0; i + 1 < res.size(); ++i) {
      double z = 0.0;
      const bool ok = separated(res[i], res[i + 1], &z);
      pass = pass && ok;
      detail += fmt::format(" nu {} < nu {} by {:.1f} SE;", found[i].recipe.exponent, found[i + 1].recipe.exponent, z);
    }
  }
  return {pass, detail};
}

// 6. Strategy ranking, analytic and simulated, on the Random* graph.
Outcome criterion_6() {
  const auto g = default_graph("random");
  const auto dist = empirical_distribution(g);
  bool pass = true;
  std::string detail;
  std::size_t k = 0;
  for (const auto& c : strategy_cases()) {
    EnsembleOptions opts;
    opts.base_seed = derive_seed(6, k++);
    opts.n_windows = 0;
    const auto s = study_strategies(g, c, SimConfig{}, opts);
    const bool analytic = s.better.analytic_q < s.worse.analytic_q;
    double z = 0.0;
    const bool sim = separated(s.better.ensemble, s.worse.ensemble, &z);
    pass = pass && analytic && sim;
    detail += fmt::format("{} ({} < {}): q {:.4f} vs {:.4f} {}, sim {:.1f} vs {:.1f} gap {:.1f} SE {}; ", c.name,
                          to_string(c.better), to_string(c.worse), s.better.analytic_q, s.worse.analytic_q,
                          analytic ? "ok" : "WRONG ORDER", s.better.ensemble.steady_mean_ct,
                          s.worse.ensemble.steady_mean_ct, z, sim ? "ok" : "NOT SEPARATED");
  }
  return {pass, detail + fmt::format("Random* mean degree {:.3f}", dist.mean())};
}

// 7. Fraction of post-burn-in samples above c n under the threshold rates.
Outcome criterion_7() {
  const auto g = default_graph("random");
  SimConfig cfg;
  cfg.params = Parameters{0.25, 0.002, 0.1, 0.0};
  EnsembleOptions opts;
  opts.runs = 10;
  opts.base_seed = 77;
  const auto r = threshold_exceedance(g, cfg, 0.5, 0.159, opts);
  const auto& v = r.verdict;
  return {r.exceed_fraction <= 0.159,
          fmt::format("exceed fraction {:.4f} over {} samples (need <= 0.159); steady mean C_t {:.1f} of {}; "
                      "bounds q in [{:.4f}, {:.4f}], z={:.4f}, c^2n/(n+z^2)={:.4f}, sufficient {} necessary {}",
                      r.exceed_fraction, r.samples, r.ensemble.steady_mean_ct, g.node_count(), v.lower, v.upper, v.z,
                      v.rhs, v.sufficient_holds, v.necessary_holds)};
}

// 8. Instant analytic property suites.
Outcome criterion_8() {
  Rng rng(8);
  int failures = 0;
  std::string detail;

  int mono = 0;
  for (int i = 0; i < 100; ++i) {
    const Parameters p{0.02 + 0.5 * rng.uniform(), 0.02 + 0.5 * rng.uniform(), 0.02 + 0.5 * rng.uniform(), 0.0};
    const auto d = DegreeDistribution::random(100 + rng.below(2000), 0.01 * rng.uniform() + 1e-4);
    const double q = solve_q(p, d).q;
    for (int which = 0; which < 4; ++which) {
      Parameters m = p;
      double* rate[] = {&m.alpha, &m.beta, &m.gamma, &m.eta};
      *rate[which] += 0.01 + 0.1 * rng.uniform();
      const double q2 = solve_q(m, d).q;
      const bool up = which == 0 || which == 2;
      if (up ? !(q2 > q) : !(q2 < q)) ++failures;
      ++mono;
    }
  }
  detail += fmt::format("monotonicity {} sweeps; ", mono);

  int pairs = 0;
  while (pairs < 50) {
    const Parameters p{0.02 + 0.5 * rng.uniform(), 0.02 + 0.5 * rng.uniform(), 0.02 + 0.5 * rng.uniform(), 0.0};
    const std::size_t n = 50 + rng.below(2000);
    DegreeDistribution a = DegreeDistribution::regular(0), b = a;
    OrderVerdict v;
    switch (pairs % 4) {
    case 0:
      a = DegreeDistribution::regular(rng.below(10));
      b = DegreeDistribution::regular(rng.below(10));
      v = order_same_family(a, b);
      break;
    case 1:
      a = DegreeDistribution::random(n, 0.01 * rng.uniform());
      b = DegreeDistribution::random(n, 0.01 * rng.uniform());
      v = order_same_family(a, b);
      break;
    case 2: {
      const std::size_t l = 1 + rng.below(3);
      a = DegreeDistribution::power_law(l, 1.0 + 2.0 * rng.uniform(), n);
      b = DegreeDistribution::power_law(l, 1.0 + 2.0 * rng.uniform(), n);
      v = order_same_family(a, b);
      break;
    }
    default: {
      const std::size_t l = 1 + rng.below(4);
      a = DegreeDistribution::regular(rng.below(l + 1));
      b = DegreeDistribution::power_law(l, 1.0 + 2.0 * rng.uniform(), n);
      v = order_cross_family(a, b, n);
      break;
    }
    }
    const double qa = solve_q(p, a).q, qb = solve_q(p, b).q;
    if (v.relation == Relation::LE && !(qa <= qb + 1e-10)) ++failures;
    if (v.relation == Relation::GE && !(qa + 1e-10 >= qb)) ++failures;
    if (v.relation == Relation::EQ && std::abs(qa - qb) > 1e-9) ++failures;
    ++pairs;
  }
  detail += "order => q on 50 pairs; ";

  for (int i = 0; i < 50; ++i) {
    const double eps = 0.001 + 0.998 * rng.uniform();
    const double c = 0.01 + 0.98 * rng.uniform();
    const std::size_t n = 1 + rng.below(100000);
    const double z = normal_quantile(eps);
    if (threshold_lambda(c, n, z) < threshold_rhs(c, n, z) - 1e-15) ++failures;
  }
  detail += "lambda >= c^2 n/(n+z^2) on 50 triples; ";

  double worst = 0.0;
  for (double e : {1e-9, 1e-6, 1e-4, 0.001, 0.005, 0.01, 0.025, 0.05, 0.1, 0.159, 0.2, 0.3, 0.4, 0.45, 0.5, 0.6, 0.75,
                   0.9, 0.99, 0.999999})
    worst = std::max(worst, std::abs(normal_quantile(e) - oracle::quantile(e)));
  if (worst > 1e-6) ++failures;
  detail += fmt::format("quantile worst error {:.2e} at 20 points; failures {}", worst, failures);
  return {failures == 0, detail};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 9. Every command, re-run with the same flags, reproduces its outputs byte for byte.
Outcome criterion_9() {
  const auto dir = fs::temp_directory_path() / "vgsec_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string graph = (dir / "g.txt").string();
  const std::vector<std::pair<std::vector<std::string>, std::vector<fs::path>>> commands{
      {{"gen", "--type", "powerlaw", "--n", "500", "--exponent", "1.65", "--min-degree", "2", "--seed", "3", "--out",
        graph},
       {graph}},
      {{"solve", "--graph", graph}, {}},
      {{"compare", "--dist", "random:2000:0.002", "--graph", graph}, {}},
      {{"strategies", "--graph", graph, "--alpha", "0.1", "--beta", "0.05", "--omega", "0.05"}, {}},
      {{"threshold", "--graph", graph, "--c", "0.5", "--epsilon", "0.159"}, {}},
      {{"simulate", "--graph", graph, "--runs", "4", "--seed", "7", "--out-dir", (dir / "sim").string()},
       {dir / "sim" / "trajectory.csv", dir / "sim" / "ct.csv", dir / "sim" / "estimates.json"}},
      {{"experiment", "--name", "strategies_3v2", "--seed", "11", "--out-dir", (dir / "exp").string(), "--overrides",
        R"({"n": 300, "runs": 5})"},
       {}},
  };
  std::size_t compared = 0;
  for (const auto& [args, files] : commands) {
    std::vector<std::string> outputs;
    std::map<fs::path, std::string> contents[2];
    for (int rep = 0; rep < 2; ++rep) {
      std::ostringstream out, err;
      const int code = run_cli(args, out, err);
      if (code != 0) return {false, fmt::format("'{}' exited {}: {}", args[0], code, err.str())};
      outputs.push_back(out.str());
      auto all = files;
      if (args[0] == "experiment")
        for (const auto& e : fs::directory_iterator(dir / "exp")) all.push_back(e.path());
      for (const auto& f : all) contents[rep][f] = slurp(f);
    }
    if (outputs[0] != outputs[1]) return {false, "stdout of '" + args[0] + "' differs between runs"};
    if (contents[0] != contents[1]) return {false, "files written by '" + args[0] + "' differ between runs"};
    compared += 1 + contents[0].size();
  }
  fs::remove_all(dir);
  return {true, fmt::format("7 commands run twice, {} outputs byte-identical", compared)};
}

} // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria{
      {1, {"oracle equivalence", criterion_1}},     {2, {"solver closed form", criterion_2}},
      {3, {"bounds containment", criterion_3}},     {4, {"stability", criterion_4}},
      {5, {"topology ordering", criterion_5}},      {6, {"strategy ranking", criterion_6}},
      {7, {"threshold validation", criterion_7}},   {8, {"analytic properties", criterion_8}},
      {9, {"determinism", criterion_9}},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (const auto& [k, _] : criteria) selected.push_back(k);

  int failed = 0;
  for (int k : selected) {
    auto it = criteria.find(k);
    if (it == criteria.end()) {
      std::cerr << "unknown criterion " << k << "\n";
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << k << " (" << it->second.first << ", "
              << fmt::format("{:.1f}s", secs) << "): " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
