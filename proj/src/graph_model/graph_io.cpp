#include "vgsec/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "vgsec/errors.hpp"

namespace vgsec {

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

} // namespace

void write_graph(std::ostream& out, const VulnerabilityGraph& graph) {
  out << graph.node_count() << ' ' << graph.edge_count() << '\n';
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

VulnerabilityGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_data_line(in, line, line_no)) throw InputError("graph file: missing 'n m' header");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    std::string rest;
    if (!(header >> n >> m) || (header >> rest) || n < 1 || m < 0)
      throw InputError("graph file line " + std::to_string(line_no) + ": bad header '" + line + "'");
  }
  std::vector<VulnerabilityGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no))
      throw InputError("graph file: expected " + std::to_string(m) + " edges, found " +
                       std::to_string(i));
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest) || u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("graph file line " + std::to_string(line_no) + ": bad edge '" + line + "'");
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (next_data_line(in, line, line_no))
    throw InputError("graph file line " + std::to_string(line_no) + ": unexpected trailing data");
  return VulnerabilityGraph(static_cast<std::size_t>(n), std::move(edges));
}

void save_graph(const std::filesystem::path& path, const VulnerabilityGraph& graph) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_graph(out, graph);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

VulnerabilityGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path.string());
  return read_graph(in);
}

nlohmann::json to_json(const DegreeDistribution& dist) {
  nlohmann::json j;
  j["kind"] = dist.kind_name();
  std::visit(
      [&j](const auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, RegularSpec>) {
          j["degree"] = spec.degree;
        } else if constexpr (std::is_same_v<T, RandomSpec>) {
          j["n"] = spec.n;
          j["edge_prob"] = spec.edge_prob;
        } else if constexpr (std::is_same_v<T, PowerLawSpec>) {
          j["min_degree"] = spec.min_degree;
          j["exponent"] = spec.exponent;
          j["n"] = spec.n;
        } else {
          j["pmf"] = spec.pmf;
        }
      },
      dist.kind());
  return j;
}

DegreeDistribution distribution_from_json(const nlohmann::json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "regular") return DegreeDistribution::regular(j.at("degree").get<std::size_t>());
    if (kind == "random")
      return DegreeDistribution::random(j.at("n").get<std::size_t>(), j.at("edge_prob").get<double>());
    if (kind == "powerlaw")
      return DegreeDistribution::power_law(j.at("min_degree").get<std::size_t>(),
                                           j.at("exponent").get<double>(), j.at("n").get<std::size_t>());
    if (kind == "empirical") return DegreeDistribution::empirical(j.at("pmf").get<std::vector<double>>());
    throw InputError("unknown distribution kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("distribution JSON: ") + e.what());
  }
}

DegreeDistribution load_distribution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open distribution file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("distribution file " + path.string() + ": " + e.what());
  }
  return distribution_from_json(j);
}

} // namespace vgsec
