#pragma once

// Seismic hazard chain: attenuation -> fragility -> node and edge failure
// probabilities -> Monte-Carlo damage draws.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "netinfer/id_set.hpp"
#include "netinfer/network.hpp"
#include "netinfer/random.hpp"

namespace netinfer {

/// Lognormal fragility curve for the single failed damage state.
struct FragilityParams {
    double median_pga = 1.0; // g
    double beta = 0.5;       // std. dev. of ln(PGA)

    /// Throws InvalidParameter unless both fields are positive and finite.
    void validate() const;
};

struct DisasterScenario {
    double lat = 0.0;
    double lon = 0.0;
    double magnitude = 6.0; // moment magnitude
    double prior = 1.0;
};

constexpr double kMinMagnitude = 4.0;
constexpr double kMaxMagnitude = 9.0;

/// Validated, non-empty list of scenarios whose priors sum to 1 (within 1e-9).
class ScenarioSet {
public:
    explicit ScenarioSet(std::vector<DisasterScenario> scenarios);

    std::size_t size() const noexcept { return scenarios_.size(); }
    const DisasterScenario& operator[](std::size_t i) const { return scenarios_.at(i); }
    std::span<const DisasterScenario> scenarios() const noexcept { return scenarios_; }

private:
    std::vector<DisasterScenario> scenarios_;
};

/// Median PGA (g) at epicentral distance `distance_km` for magnitude `magnitude`.
/// Throws NegativeDistance.
double attenuation_median_pga(double magnitude, double distance_km);

/// Standard normal CDF via erfc.
double standard_normal_cdf(double x) noexcept;

/// Probability of reaching the failed state at the given PGA. Zero PGA gives 0.
double fragility_failure_prob(double pga, const FragilityParams& params);

/// An edge fails when either endpoint fails: p1 + p2 - p1 p2. Throws OutOfRangeProbability.
double edge_failure_prob(double p1, double p2);

/// Fragility assignment by role with per-node overrides. A missing value
/// (std::nullopt) marks the role or node invulnerable.
struct FragilityMap {
    std::map<NodeRole, std::optional<FragilityParams>> by_role;
    std::map<NodeId, std::optional<FragilityParams>> by_node;

    /// Per-node parameters. Transshipment nodes without an entry are invulnerable;
    /// supply and demand nodes without one raise MissingFragility.
    std::vector<std::optional<FragilityParams>> resolve(const InfraNetwork& net) const;
};

/// F(e|o) for every scenario and edge, plus the scenario priors p(o).
class FailureProbTable {
public:
    FailureProbTable(std::vector<double> priors, std::size_t edge_count, std::vector<double> probs);

    std::size_t scenario_count() const noexcept { return priors_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    double prior(std::size_t scenario) const { return priors_.at(scenario); }
    double prob(std::size_t scenario, EdgeId e) const;
    std::span<const double> row(std::size_t scenario) const;

    friend bool operator==(const FailureProbTable&, const FailureProbTable&) = default;

private:
    std::vector<double> priors_;
    std::size_t edge_count_ = 0;
    std::vector<double> probs_; // row-major, scenario x edge
};

/// Node failure probabilities for one scenario (0 for invulnerable nodes).
std::vector<double> node_failure_probs(const InfraNetwork& net, const DisasterScenario& scenario,
                                       std::span<const std::optional<FragilityParams>> fragility);

FailureProbTable failure_prob_table(const InfraNetwork& net, const ScenarioSet& scenarios,
                                    const FragilityMap& fragility);

/// Independent Bernoulli draw of every edge, ascending edge id.
EdgeSet sample_damage(const FailureProbTable& table, std::size_t scenario, RandomSource& rng);

/// Categorical draw by prior.
std::size_t sample_scenario(const ScenarioSet& scenarios, RandomSource& rng);

/// Scenario set with epicenters drawn from node locations and magnitudes from
/// `magnitudes`, uniform priors.
ScenarioSet generate_scenarios(const InfraNetwork& net, std::span<const double> magnitudes,
                               std::size_t count, RandomSource& rng);

} // namespace netinfer
