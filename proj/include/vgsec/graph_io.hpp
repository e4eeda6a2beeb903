#pragma once

#include <filesystem>
#include <iosfwd>

#include <json.hpp>

#include "vgsec/degree_distribution.hpp"
#include "vgsec/graph.hpp"

namespace vgsec {

// Graph text format:
//   # comment lines anywhere
//   n m
//   u v      (m lines, 0-based, u < v)

void write_graph(std::ostream& out, const VulnerabilityGraph& graph);
VulnerabilityGraph read_graph(std::istream& in);
void save_graph(const std::filesystem::path& path, const VulnerabilityGraph& graph);
VulnerabilityGraph load_graph(const std::filesystem::path& path);

nlohmann::json to_json(const DegreeDistribution& dist);
DegreeDistribution distribution_from_json(const nlohmann::json& j);
DegreeDistribution load_distribution(const std::filesystem::path& path);

} // namespace vgsec
