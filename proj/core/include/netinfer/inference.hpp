#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "netinfer/hazard.hpp"
#include "netinfer/id_set.hpp"
#include "netinfer/mdl.hpp"
#include "netinfer/network.hpp"
#include "netinfer/probes.hpp"

namespace netinfer {

enum class Algorithm {
    JointPathMap,     ///< greedy on the full MDL cost, seeded with the point probes
    ModelCost,        ///< greedy on the model cost only, probe data ignored except feasibility
    OnlyConnectivity, ///< greedy with no point-probe channel
    Exhaustive,       ///< exact argmin over all failure sets (small networks only)
};

std::string_view to_string(Algorithm algorithm) noexcept;
Algorithm parse_algorithm(std::string_view name);

/// Greedy objectives are ordered lexicographically by (zero_prob_terms, bits):
/// the number of asserted probability-zero events (gamma or F at 0 or 1), then the
/// finite remainder in bits. The cost is +infinity while zero_prob_terms > 0; the
/// ordering lets the search walk out of such states one edge at a time.
struct TraceStep {
    EdgeId added;
    double objective;                // finite part after adding `added`
    std::size_t zero_prob_terms = 0;
};

struct Solution {
    Algorithm algorithm = Algorithm::JointPathMap;
    std::size_t scenario = 0;
    EdgeSet failed;
    NodeSet serviced;
    /// Breakdown of the objective the algorithm minimised, recomputed from scratch on
    /// the final set. ModelCost reports a zero data cost; OnlyConnectivity reports the
    /// connectivity terms only.
    MdlCost cost;
    std::size_t iterations = 0;

    /// Greedy start set and objective (TraceStep encoding) for the chosen scenario,
    /// followed by every step.
    EdgeSet initial;
    double initial_objective = kInfiniteBits;
    std::size_t initial_zero_prob_terms = 0;
    std::vector<TraceStep> trace;

    /// Final objective per scenario (alpha(o)); +infinity where no feasible set exists.
    std::vector<double> scenario_objectives;
};

struct GreedyOptions {
    double epsilon = kCostEpsilon;
    bool record_trace = true;
};

constexpr std::size_t kExhaustiveEdgeLimit = 20;

/// Greedy MDL minimisation. For every scenario the failure set starts at the point
/// probes and repeatedly gains the edge whose addition lowers the cost the most (by
/// more than epsilon; ties go to the smallest edge id), in the TraceStep ordering. The scenario with the lowest
/// final cost wins, ties to the smallest index. Throws InfeasibleProbes when no
/// scenario admits a finite cost.
Solution joint_path_map(const InfraNetwork& net, const FailureProbTable& table, const ProbeSet& probes,
                        const GreedyOptions& options = {});

/// Same loop on the model cost alone, starting from the empty set. Connectivity
/// probes must stay serviced.
Solution model_cost_baseline(const InfraNetwork& net, const FailureProbTable& table, const ProbeSet& probes,
                             const GreedyOptions& options = {});

/// Same loop with the point probes and their cost terms removed.
Solution only_connectivity(const InfraNetwork& net, const FailureProbTable& table, const ProbeSet& probes,
                           const GreedyOptions& options = {});

/// Exact minimiser of the full MDL cost over every scenario and every failure set
/// containing the point probes. Throws TooLarge when |E| exceeds `max_edges` or
/// kExhaustiveEdgeLimit.
Solution exhaustive_optimal(const InfraNetwork& net, const FailureProbTable& table, const ProbeSet& probes,
                            std::size_t max_edges = kExhaustiveEdgeLimit);

Solution run_algorithm(Algorithm algorithm, const InfraNetwork& net, const FailureProbTable& table,
                       const ProbeSet& probes, std::size_t exhaustive_edge_budget = kExhaustiveEdgeLimit);

/// Verifies a solution: point probes kept (where the algorithm observes them),
/// connectivity probes serviced at every step of the trace, trace strictly
/// decreasing by more than epsilon, serviced set consistent, cost finite.
/// Returns one message per violation.
std::vector<std::string> check_solution(const InfraNetwork& net, const ProbeSet& probes, const Solution& solution,
                                        double epsilon = kCostEpsilon);

} // namespace netinfer
