#include "netinfer/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace netinfer::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& origin, const std::string& msg) {
    throw Error(Errc::Parse, origin + ": " + msg);
}

json parse_json(std::string_view text, const std::string& origin) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        parse_fail(origin, e.what());
    }
}

// Wraps nlohmann type/out-of-range errors with the file they came from.
template <class Fn>
auto with_origin(const std::string& origin, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& e) {
        parse_fail(origin, e.what());
    } catch (const Error& e) {
        if (std::string_view(e.what()).starts_with(origin + ":"))
            throw;
        throw Error(e.code(), origin + ": " + e.what());
    }
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

// Objects carrying an "id" field sorted by id, which must run 0..n-1.
std::vector<json> by_contiguous_id(const json& array, const char* what, const std::string& origin) {
    if (!array.is_array())
        parse_fail(origin, std::string("'") + what + "' must be an array");
    std::vector<json> items(array.begin(), array.end());
    std::stable_sort(items.begin(), items.end(),
                     [](const json& a, const json& b) { return a.at("id").get<long long>() < b.at("id").get<long long>(); });
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto id = items[i].at("id").get<long long>();
        if (id != static_cast<long long>(i))
            parse_fail(origin, std::string(what) + " ids must be contiguous 0..n-1; expected id " + std::to_string(i)
                                   + ", found " + std::to_string(id));
    }
    return items;
}

} // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::Io, "cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(Errc::Io, "cannot open '" + path.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        throw Error(Errc::Io, "failed writing '" + path.string() + "'");
}

InfraNetwork parse_network(std::string_view json_text, const std::string& origin) {
    const json doc = parse_json(json_text, origin);
    return with_origin(origin, [&] {
        std::vector<NodeSpec> nodes;
        for (const auto& n : by_contiguous_id(doc.at("nodes"), "nodes", origin))
            nodes.push_back({parse_node_role(n.at("role").get<std::string>()), n.at("lat").get<double>(),
                             n.at("lon").get<double>()});
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (const auto& e : by_contiguous_id(doc.at("edges"), "edges", origin)) {
            const auto u = e.at("u").get<long long>();
            const auto v = e.at("v").get<long long>();
            if (u < 0 || v < 0)
                throw Error(Errc::BadIndex, origin + ": edge " + std::to_string(edges.size()) + " has a negative endpoint");
            edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        }
        return InfraNetwork::build(std::move(nodes), edges, doc.at("L").get<int>());
    });
}

InfraNetwork load_network(const std::filesystem::path& path) { return parse_network(read_file(path), path.string()); }

std::string network_to_json(const InfraNetwork& net) {
    json doc;
    doc["L"] = net.hop_bound();
    doc["nodes"] = json::array();
    for (NodeId i = 0; i < net.node_count(); ++i) {
        const auto& n = net.node(i);
        doc["nodes"].push_back({{"id", i}, {"role", std::string(to_string(n.role))}, {"lat", n.lat}, {"lon", n.lon}});
    }
    doc["edges"] = json::array();
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
        const auto [u, v] = net.edge_endpoints(e);
        doc["edges"].push_back({{"id", e}, {"u", u}, {"v", v}});
    }
    return doc.dump(2) + "\n";
}

ScenarioSet parse_scenarios(std::string_view json_text, const std::string& origin, bool* priors_defaulted) {
    const json doc = parse_json(json_text, origin);
    return with_origin(origin, [&] {
        std::vector<DisasterScenario> out;
        const auto& list = doc.at("scenarios");
        std::size_t with_prior = 0;
        for (const auto& s : list) {
            const auto& epicenter = s.at("epicenter");
            if (!epicenter.is_array() || epicenter.size() != 2)
                parse_fail(origin, "scenario epicenter must be [lat, lon]");
            const bool has_prior = s.contains("prior");
            with_prior += has_prior ? 1 : 0;
            out.push_back({epicenter[0].get<double>(), epicenter[1].get<double>(), s.at("magnitude").get<double>(),
                           has_prior ? s.at("prior").get<double>() : 0.0});
        }
        if (with_prior != 0 && with_prior != out.size())
            parse_fail(origin, "either every scenario or none must carry a prior");
        if (with_prior == 0)
            for (auto& s : out)
                s.prior = 1.0 / static_cast<double>(out.size());
        if (priors_defaulted)
            *priors_defaulted = with_prior == 0 && !out.empty();
        try {
            return ScenarioSet(std::move(out));
        } catch (const Error& e) {
            throw Error(e.code(), origin + ": " + e.what());
        }
    });
}

ScenarioSet load_scenarios(const std::filesystem::path& path, bool* priors_defaulted) {
    return parse_scenarios(read_file(path), path.string(), priors_defaulted);
}

std::string scenarios_to_json(const ScenarioSet& scenarios) {
    json doc;
    doc["scenarios"] = json::array();
    for (const auto& s : scenarios.scenarios())
        doc["scenarios"].push_back({{"epicenter", {s.lat, s.lon}}, {"magnitude", s.magnitude}, {"prior", s.prior}});
    return doc.dump(2) + "\n";
}

FragilityMap parse_fragility(std::string_view json_text, const std::string& origin) {
    const json doc = parse_json(json_text, origin);
    if (!doc.is_object())
        parse_fail(origin, "fragility file must be a JSON object");
    return with_origin(origin, [&] {
        FragilityMap map;
        for (const auto& [key, value] : doc.items()) {
            std::optional<FragilityParams> params;
            if (value.is_string()) {
                if (value.get<std::string>() != "invulnerable")
                    parse_fail(origin, "fragility entry '" + key + "' must be an object or \"invulnerable\"");
            } else {
                params = FragilityParams{value.at("median_pga").get<double>(), value.at("beta").get<double>()};
                params->validate();
            }
            if (key == "supply" || key == "demand" || key == "transshipment") {
                map.by_role[parse_node_role(key)] = params;
                continue;
            }
            NodeId id = 0;
            auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
            if (ec != std::errc() || ptr != key.data() + key.size())
                parse_fail(origin, "fragility key '" + key + "' is neither a role name nor a node id");
            map.by_node[id] = params;
        }
        return map;
    });
}

FragilityMap load_fragility(const std::filesystem::path& path) {
    return parse_fragility(read_file(path), path.string());
}

std::string fragility_to_json(const FragilityMap& fragility) {
    json doc = json::object();
    auto encode = [](const std::optional<FragilityParams>& p) -> json {
        if (!p)
            return "invulnerable";
        return {{"median_pga", p->median_pga}, {"beta", p->beta}};
    };
    for (const auto& [role, p] : fragility.by_role)
        doc[std::string(to_string(role))] = encode(p);
    for (const auto& [id, p] : fragility.by_node)
        doc[std::to_string(id)] = encode(p);
    return doc.dump(2) + "\n";
}

ProbeSet parse_probes(std::string_view json_text, const InfraNetwork& net, const std::string& origin) {
    const json doc = parse_json(json_text, origin);
    return with_origin(origin, [&] {
        ProbeSet probes{net.empty_node_set(), net.empty_edge_set(), doc.at("gamma_c").get<double>(),
                        doc.at("gamma_i").get<double>()};
        probes.validate();
        for (const auto& n : doc.at("qc")) {
            const auto id = n.get<long long>();
            if (id < 0 || id >= static_cast<long long>(net.node_count()))
                throw Error(Errc::BadIndex, origin + ": connectivity probe node " + std::to_string(id) + " out of range");
            if (net.role(static_cast<NodeId>(id)) != NodeRole::Demand)
                parse_fail(origin, "connectivity probe node " + std::to_string(id) + " is not a demand node");
            probes.connectivity.insert(static_cast<NodeId>(id));
        }
        for (const auto& e : doc.at("qi")) {
            const auto id = e.get<long long>();
            if (id < 0 || id >= static_cast<long long>(net.edge_count()))
                throw Error(Errc::BadIndex, origin + ": point probe edge " + std::to_string(id) + " out of range");
            probes.point.insert(static_cast<EdgeId>(id));
        }
        return probes;
    });
}

ProbeSet load_probes(const std::filesystem::path& path, const InfraNetwork& net) {
    return parse_probes(read_file(path), net, path.string());
}

std::string probes_to_json(const ProbeSet& probes) {
    json doc;
    doc["qc"] = probes.connectivity.ids();
    doc["qi"] = probes.point.ids();
    doc["gamma_c"] = probes.gamma_c;
    doc["gamma_i"] = probes.gamma_i;
    return doc.dump(2) + "\n";
}

void write_table_csv(std::ostream& out, const FailureProbTable& table) {
    out << "scenario_id,edge_id,prob\n";
    for (std::size_t o = 0; o < table.scenario_count(); ++o) {
        const auto row = table.row(o);
        for (EdgeId e = 0; e < row.size(); ++e)
            out << o << ',' << e << ',' << format_double(row[e]) << '\n';
    }
}

std::string solution_to_json(const InfraNetwork& net, const Solution& solution) {
    auto bits = [](double v) -> json { return std::isfinite(v) ? json(v) : json(nullptr); };
    json doc;
    doc["algorithm"] = std::string(to_string(solution.algorithm));
    doc["scenario"] = solution.scenario;
    doc["failed_edges"] = json::array();
    solution.failed.for_each([&](EdgeId e) {
        const auto [u, v] = net.edge_endpoints(e);
        doc["failed_edges"].push_back({{"id", e}, {"u", u}, {"v", v}});
    });
    doc["serviced"] = solution.serviced.ids();
    doc["cost"] = {{"model", bits(solution.cost.model_cost)},
                   {"data", bits(solution.cost.data_cost)},
                   {"total", bits(solution.cost.total)},
                   {"feasible", solution.cost.feasible}};
    doc["iterations"] = solution.iterations;
    doc["trace"] = json::array();
    for (const auto& step : solution.trace)
        doc["trace"].push_back({{"edge", step.added},
                                {"objective", bits(step.zero_prob_terms > 0 ? kInfiniteBits : step.objective)},
                                {"zero_prob_terms", step.zero_prob_terms}});
    doc["scenario_objectives"] = json::array();
    for (double v : solution.scenario_objectives)
        doc["scenario_objectives"].push_back(bits(v));
    return doc.dump(2) + "\n";
}

} // namespace netinfer::io
