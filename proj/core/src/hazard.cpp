#include "netinfer/hazard.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace netinfer {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(Errc::OutOfRangeProbability, std::string(what) + " = " + std::to_string(p)
                                                      + " is not a probability");
}

} // namespace

void FragilityParams::validate() const {
    if (!(median_pga > 0.0 && std::isfinite(median_pga)))
        throw Error(Errc::InvalidParameter, "fragility median_pga must be > 0, got " + std::to_string(median_pga));
    if (!(beta > 0.0 && std::isfinite(beta)))
        throw Error(Errc::InvalidParameter, "fragility beta must be > 0, got " + std::to_string(beta));
}

ScenarioSet::ScenarioSet(std::vector<DisasterScenario> scenarios) : scenarios_(std::move(scenarios)) {
    if (scenarios_.empty())
        throw Error(Errc::InvalidScenarios, "scenario set is empty");
    double total = 0.0;
    for (std::size_t i = 0; i < scenarios_.size(); ++i) {
        const auto& s = scenarios_[i];
        if (!(s.prior >= 0.0 && s.prior <= 1.0))
            throw Error(Errc::InvalidScenarios, "scenario " + std::to_string(i) + " prior "
                                                    + std::to_string(s.prior) + " outside [0,1]");
        if (!(s.magnitude >= kMinMagnitude && s.magnitude <= kMaxMagnitude))
            throw Error(Errc::InvalidScenarios, "scenario " + std::to_string(i) + " magnitude "
                                                    + std::to_string(s.magnitude) + " outside [4, 9]");
        if (!(std::abs(s.lat) <= 90.0 && std::abs(s.lon) <= 180.0))
            throw Error(Errc::InvalidScenarios, "scenario " + std::to_string(i) + " epicenter out of range");
        total += s.prior;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw Error(Errc::InvalidScenarios, "scenario priors sum to " + std::to_string(total) + ", expected 1");
}

double attenuation_median_pga(double magnitude, double distance_km) {
    if (distance_km < 0.0)
        throw Error(Errc::NegativeDistance, "epicentral distance " + std::to_string(distance_km) + " km is negative");
    const double r = std::sqrt(distance_km * distance_km + 9.3 * 9.3);
    // max[ln(R/100), 0] is 0 for R <= 100, including the R = 0 limit.
    const double far_term = distance_km > 100.0 ? std::log(distance_km / 100.0) : 0.0;
    const double ln_pga = 2.2 + 0.81 * (magnitude - 6.0) - 1.27 * std::log(r) - 0.0021 * r + 0.11 * far_term;
    return std::exp(ln_pga);
}

double standard_normal_cdf(double x) noexcept {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double fragility_failure_prob(double pga, const FragilityParams& params) {
    if (pga < 0.0)
        throw Error(Errc::InvalidParameter, "PGA must be >= 0, got " + std::to_string(pga));
    if (pga == 0.0)
        return 0.0;
    return standard_normal_cdf(std::log(pga / params.median_pga) / params.beta);
}

double edge_failure_prob(double p1, double p2) {
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    return std::clamp(p1 + p2 - p1 * p2, 0.0, 1.0);
}

std::vector<std::optional<FragilityParams>> FragilityMap::resolve(const InfraNetwork& net) const {
    std::vector<std::optional<FragilityParams>> out(net.node_count());
    for (NodeId n = 0; n < net.node_count(); ++n) {
        if (auto it = by_node.find(n); it != by_node.end()) {
            out[n] = it->second;
        } else if (auto rit = by_role.find(net.role(n)); rit != by_role.end()) {
            out[n] = rit->second;
        } else if (net.role(n) == NodeRole::Transshipment) {
            out[n] = std::nullopt;
        } else {
            throw Error(Errc::MissingFragility, "no fragility parameters for node " + std::to_string(n) + " ("
                                                    + std::string(to_string(net.role(n))) + ")");
        }
        if (out[n])
            out[n]->validate();
    }
    for (const auto& [id, _] : by_node)
        if (id >= net.node_count())
            throw Error(Errc::BadIndex, "fragility entry for node " + std::to_string(id) + " which does not exist");
    return out;
}

FailureProbTable::FailureProbTable(std::vector<double> priors, std::size_t edge_count, std::vector<double> probs)
    : priors_(std::move(priors)), edge_count_(edge_count), probs_(std::move(probs)) {
    if (probs_.size() != priors_.size() * edge_count_)
        throw Error(Errc::InvalidParameter, "failure table has " + std::to_string(probs_.size())
                                                + " entries, expected " + std::to_string(priors_.size() * edge_count_));
    for (double p : priors_)
        check_probability(p, "scenario prior");
    for (double p : probs_)
        check_probability(p, "edge failure probability");
}

double FailureProbTable::prob(std::size_t scenario, EdgeId e) const {
    if (scenario >= priors_.size() || e >= edge_count_)
        throw Error(Errc::BadIndex, "failure table lookup (" + std::to_string(scenario) + ", " + std::to_string(e)
                                        + ") out of range");
    return probs_[scenario * edge_count_ + e];
}

std::span<const double> FailureProbTable::row(std::size_t scenario) const {
    if (scenario >= priors_.size())
        throw Error(Errc::BadIndex, "scenario " + std::to_string(scenario) + " out of range");
    return std::span<const double>(probs_).subspan(scenario * edge_count_, edge_count_);
}

std::vector<double> node_failure_probs(const InfraNetwork& net, const DisasterScenario& scenario,
                                       std::span<const std::optional<FragilityParams>> fragility) {
    std::vector<double> probs(net.node_count(), 0.0);
    for (NodeId n = 0; n < net.node_count(); ++n) {
        if (!fragility[n])
            continue;
        const auto& spec = net.node(n);
        const double r = haversine_km(scenario.lat, scenario.lon, spec.lat, spec.lon);
        probs[n] = fragility_failure_prob(attenuation_median_pga(scenario.magnitude, r), *fragility[n]);
    }
    return probs;
}

FailureProbTable failure_prob_table(const InfraNetwork& net, const ScenarioSet& scenarios,
                                    const FragilityMap& fragility) {
    const auto params = fragility.resolve(net);
    std::vector<double> priors;
    std::vector<double> probs;
    priors.reserve(scenarios.size());
    probs.reserve(scenarios.size() * net.edge_count());
    for (const auto& scenario : scenarios.scenarios()) {
        priors.push_back(scenario.prior);
        const auto node_probs = node_failure_probs(net, scenario, params);
        for (const auto& edge : net.edges())
            probs.push_back(edge_failure_prob(node_probs[edge.u], node_probs[edge.v]));
    }
    return FailureProbTable(std::move(priors), net.edge_count(), std::move(probs));
}

EdgeSet sample_damage(const FailureProbTable& table, std::size_t scenario, RandomSource& rng) {
    const auto row = table.row(scenario);
    EdgeSet failed(row.size());
    for (EdgeId e = 0; e < row.size(); ++e)
        if (rng.bernoulli(row[e]))
            failed.insert(e);
    return failed;
}

std::size_t sample_scenario(const ScenarioSet& scenarios, RandomSource& rng) {
    const double u = rng.uniform01();
    double cumulative = 0.0;
    std::size_t last_possible = 0;
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        const double p = scenarios[i].prior;
        if (p <= 0.0)
            continue;
        cumulative += p;
        last_possible = i;
        if (u < cumulative)
            return i;
    }
    // Priors may sum to slightly under 1.
    return last_possible;
}

ScenarioSet generate_scenarios(const InfraNetwork& net, std::span<const double> magnitudes, std::size_t count,
                               RandomSource& rng) {
    if (magnitudes.empty())
        throw Error(Errc::InvalidParameter, "scenario generation needs at least one magnitude");
    if (count == 0)
        throw Error(Errc::InvalidParameter, "scenario generation needs count >= 1");
    std::vector<DisasterScenario> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& site = net.node(static_cast<NodeId>(rng.next_u64() % net.node_count()));
        const double m = magnitudes[rng.next_u64() % magnitudes.size()];
        out.push_back({site.lat, site.lon, m, 1.0 / static_cast<double>(count)});
    }
    return ScenarioSet(std::move(out));
}

} // namespace netinfer
