#pragma once

// File formats:
//   network    {"L": int, "nodes": [{"id", "role", "lat", "lon"}], "edges": [{"id", "u", "v"}]}
//   scenarios  {"scenarios": [{"epicenter": [lat, lon], "magnitude": float, "prior": float}]}
//   fragility  {"<role>|<node id>": {"median_pga": float, "beta": float} | "invulnerable"}
//   probes     {"qc": [node ids], "qi": [edge ids], "gamma_c": float, "gamma_i": float}
//   table CSV  scenario_id,edge_id,prob

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "netinfer/hazard.hpp"
#include "netinfer/inference.hpp"
#include "netinfer/network.hpp"
#include "netinfer/probes.hpp"

namespace netinfer::io {

InfraNetwork parse_network(std::string_view json_text, const std::string& origin = "<memory>");
InfraNetwork load_network(const std::filesystem::path& path);
std::string network_to_json(const InfraNetwork& net);

/// Priors may be omitted from every scenario, in which case they default to uniform
/// and `priors_defaulted` (when given) is set.
ScenarioSet parse_scenarios(std::string_view json_text, const std::string& origin = "<memory>",
                            bool* priors_defaulted = nullptr);
ScenarioSet load_scenarios(const std::filesystem::path& path, bool* priors_defaulted = nullptr);
std::string scenarios_to_json(const ScenarioSet& scenarios);

FragilityMap parse_fragility(std::string_view json_text, const std::string& origin = "<memory>");
FragilityMap load_fragility(const std::filesystem::path& path);
std::string fragility_to_json(const FragilityMap& fragility);

ProbeSet parse_probes(std::string_view json_text, const InfraNetwork& net, const std::string& origin = "<memory>");
ProbeSet load_probes(const std::filesystem::path& path, const InfraNetwork& net);
std::string probes_to_json(const ProbeSet& probes);

/// One row per (scenario, edge), probabilities printed with round-trip precision.
void write_table_csv(std::ostream& out, const FailureProbTable& table);

std::string solution_to_json(const InfraNetwork& net, const Solution& solution);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace netinfer::io
