#include "netinfer/inference.hpp"

#include <cmath>
#include <cstdint>
#include <optional>

#include "netinfer/serviceability.hpp"

namespace netinfer {

std::string_view to_string(Algorithm algorithm) noexcept {
    switch (algorithm) {
    case Algorithm::JointPathMap: return "jointpathmap";
    case Algorithm::ModelCost: return "modelcost";
    case Algorithm::OnlyConnectivity: return "onlyconnectivity";
    case Algorithm::Exhaustive: return "exhaustive";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    for (auto a : {Algorithm::JointPathMap, Algorithm::ModelCost, Algorithm::OnlyConnectivity, Algorithm::Exhaustive})
        if (name == to_string(a))
            return a;
    throw Error(Errc::Config, "unknown algorithm '" + std::string(name) + "'");
}

namespace {

bool uses_point_probes(Algorithm a) { return a == Algorithm::JointPathMap || a == Algorithm::Exhaustive; }

// Cost split into a count of probability-zero terms and the finite remainder.
struct Objective {
    std::size_t zero_terms = 0;
    double bits = 0.0;

    void add(double term) {
        if (std::isinf(term))
            ++zero_terms;
        else
            bits += term;
    }
    void add_channel(std::size_t hits, std::size_t misses, double gamma) {
        if (hits > 0) {
            if (gamma <= 0.0)
                zero_terms += hits;
            else
                bits -= 2.0 * static_cast<double>(hits) * std::log2(gamma);
        }
        if (misses > 0) {
            if (gamma >= 1.0)
                zero_terms += misses;
            else
                bits -= 2.0 * static_cast<double>(misses) * std::log2(1.0 - gamma);
        }
    }
    double value() const { return zero_terms > 0 ? kInfiniteBits : bits; }
};

bool lower(const Objective& a, const Objective& b) {
    return a.zero_terms != b.zero_terms ? a.zero_terms < b.zero_terms : a.bits < b.bits;
}

bool improves(const Objective& candidate, const Objective& current, double epsilon) {
    if (candidate.zero_terms != current.zero_terms)
        return candidate.zero_terms < current.zero_terms;
    return candidate.bits < current.bits - epsilon;
}

class GreedySearch {
public:
    GreedySearch(const InfraNetwork& net, const FailureProbTable& table, const ProbeSet& probes,
                 Algorithm algorithm, const GreedyOptions& options)
        : net_(net), table_(table), probes_(probes), algorithm_(algorithm), options_(options), bfs_(net), probe_bfs_(net) {}

    Solution run() {
        probes_.validate();
        std::optional<Solution> winner;
        std::vector<double> per_scenario;
        for (std::size_t o = 0; o < table_.scenario_count(); ++o) {
            Solution candidate = run_scenario(o);
            per_scenario.push_back(candidate.cost.total);
            if (!candidate.cost.feasible)
                continue;
            if (!winner || candidate.cost.total < winner->cost.total)
                winner = std::move(candidate);
        }
        if (!winner)
            throw Error(Errc::InfeasibleProbes, "no disaster scenario admits a failure set consistent with the probes");
        winner->scenario_objectives = std::move(per_scenario);
        return std::move(*winner);
    }

private:
    Objective objective(const Objective& model, std::size_t serviced, std::size_t failed) const {
        Objective total = model;
        const std::size_t qc = probes_.connectivity.size();
        switch (algorithm_) {
        case Algorithm::ModelCost: return total;
        case Algorithm::OnlyConnectivity: break;
        default: {
            const std::size_t qi = probes_.point.size();
            total.bits -= log2_binomial(failed, qi);
            total.add_channel(qi, failed - qi, probes_.gamma_i);
        }
        }
        total.bits -= log2_binomial(serviced, qc);
        total.add_channel(qc, serviced - qc, probes_.gamma_c);
        return total;
    }

    MdlCost final_cost(std::size_t o, const EdgeSet& failed, const NodeSet& serviced) const {
        const double model = model_cost_unchecked(table_, o, failed);
        switch (algorithm_) {
        case Algorithm::ModelCost:
            return probes_.connectivity.is_subset_of(serviced) ? MdlCost::of(model, 0.0) : MdlCost::infeasible();
        case Algorithm::OnlyConnectivity:
            return MdlCost::of(model, data_cost(serviced, failed, probes_, DataTerms::ConnectivityOnly));
        default: return MdlCost::of(model, data_cost(serviced, failed, probes_, DataTerms::Joint));
        }
    }

    Solution run_scenario(std::size_t o) {
        const auto row = table_.row(o);
        const std::size_t m = row.size();
        std::vector<double> fail_bits(m);
        std::vector<double> keep_bits(m);
        for (EdgeId e = 0; e < m; ++e) {
            fail_bits[e] = row[e] > 0.0 ? -std::log2(row[e]) : kInfiniteBits;
            keep_bits[e] = row[e] < 1.0 ? -std::log2(1.0 - row[e]) : kInfiniteBits;
        }

        Solution sol;
        sol.algorithm = algorithm_;
        sol.scenario = o;
        sol.failed = uses_point_probes(algorithm_) ? probes_.point : net_.empty_edge_set();
        sol.initial = sol.failed;

        Objective model;
        model.add(table_.prior(o) > 0.0 ? -std::log2(table_.prior(o)) : kInfiniteBits);
        for (EdgeId e = 0; e < m; ++e)
            model.add(sol.failed.contains(e) ? fail_bits[e] : keep_bits[e]);

        bfs_.run(sol.failed);
        // Serviced sets only shrink as edges are added, so an infeasible start is final.
        const bool feasible_start = probes_.connectivity.is_subset_of(bfs_.serviced());
        Objective current;
        if (feasible_start)
            current = objective(model, bfs_.serviced().size(), sol.failed.size());
        sol.initial_objective = feasible_start ? current.bits : kInfiniteBits;
        sol.initial_zero_prob_terms = current.zero_terms;

        // Edges whose removal already disconnects a connectivity probe stay that way.
        std::vector<std::uint8_t> blocked(m, 0);
        std::vector<std::uint8_t> tree;
        std::size_t serviced_now = bfs_.serviced().size();
        while (feasible_start) {
            bfs_.tree_edges(tree);
            std::optional<Objective> best;
            std::optional<EdgeId> best_edge;
            Objective best_model;
            for (EdgeId e = 0; e < m; ++e) {
                if (blocked[e] || sol.failed.contains(e))
                    continue;
                Objective trial = model;
                if (std::isinf(keep_bits[e]))
                    --trial.zero_terms;
                else
                    trial.bits -= keep_bits[e];
                trial.add(fail_bits[e]);
                std::size_t serviced = serviced_now;
                if (tree[e]) {
                    probe_bfs_.run(sol.failed, e);
                    if (!probes_.connectivity.is_subset_of(probe_bfs_.serviced())) {
                        blocked[e] = 1;
                        continue;
                    }
                    serviced = probe_bfs_.serviced().size();
                }
                const Objective value = objective(trial, serviced, sol.failed.size() + 1);
                if (!best || lower(value, *best)) {
                    best = value;
                    best_edge = e;
                    best_model = trial;
                }
            }
            if (!best || !improves(*best, current, options_.epsilon))
                break;
            sol.failed.insert(*best_edge);
            bfs_.run(sol.failed);
            serviced_now = bfs_.serviced().size();
            model = best_model;
            current = *best;
            ++sol.iterations;
            if (options_.record_trace)
                sol.trace.push_back({*best_edge, current.bits, current.zero_terms});
        }

        sol.serviced = serviced_set(net_, sol.failed);
        sol.cost = final_cost(o, sol.failed, sol.serviced);
        return sol;
    }

    const InfraNetwork& net_;
    const FailureProbTable& table_;
    const ProbeSet& probes_;
    Algorithm algorithm_;
    GreedyOptions options_;
    BoundedBfs bfs_;       // current failure set
    BoundedBfs probe_bfs_; // current set plus one candidate
};

void check_table(const InfraNetwork& net, const FailureProbTable& table) {
    if (table.edge_count() != net.edge_count())
        throw Error(Errc::InvalidParameter, "failure table covers " + std::to_string(table.edge_count())
                                                + " edges but the network has " + std::to_string(net.edge_count()));
}

} // namespace

Solution joint_path_map(const InfraNetwork& net, const FailureProbTable& table, const ProbeSet& probes,
                        const GreedyOptions& options) {
    check_table(net, table);
    return GreedySearch(net, table, probes, Algorithm::JointPathMap, options).run();
}

Solution model_cost_baseline(const InfraNetwork& net, const FailureProbTable& table, const ProbeSet& probes,
                             const GreedyOptions& options) {
    check_table(net, table);
    return GreedySearch(net, table, probes, Algorithm::ModelCost, options).run();
}

Solution only_connectivity(const InfraNetwork& net, const FailureProbTable& table, const ProbeSet& probes,
                           const GreedyOptions& options) {
    check_table(net, table);
    ProbeSet connectivity_only = probes;
    connectivity_only.point.clear();
    return GreedySearch(net, table, connectivity_only, Algorithm::OnlyConnectivity, options).run();
}

Solution exhaustive_optimal(const InfraNetwork& net, const FailureProbTable& table, const ProbeSet& probes,
                            std::size_t max_edges) {
    check_table(net, table);
    probes.validate();
    const std::size_t m = net.edge_count();
    if (m > max_edges || m > kExhaustiveEdgeLimit)
        throw Error(Errc::TooLarge, "exhaustive search over " + std::to_string(m) + " edges exceeds the budget of "
                                        + std::to_string(std::min(max_edges, kExhaustiveEdgeLimit)));

    std::vector<EdgeId> free_edges;
    for (EdgeId e = 0; e < m; ++e)
        if (!probes.point.contains(e))
            free_edges.push_back(e);

    BoundedBfs bfs(net);
    Solution best;
    best.algorithm = Algorithm::Exhaustive;
    best.cost = MdlCost::infeasible();
    const std::uint64_t subsets = std::uint64_t{1} << free_edges.size();
    for (std::size_t o = 0; o < table.scenario_count(); ++o) {
        double scenario_best = kInfiniteBits;
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            EdgeSet failed = probes.point;
            for (std::size_t j = 0; j < free_edges.size(); ++j)
                if (mask >> j & 1U)
                    failed.insert(free_edges[j]);
            bfs.run(failed);
            const auto cost = MdlCost::of(model_cost_unchecked(table, o, failed),
                                          data_cost(bfs.serviced(), failed, probes, DataTerms::Joint));
            if (!cost.feasible)
                continue;
            scenario_best = std::min(scenario_best, cost.total);
            if (cost.total < best.cost.total) {
                best.cost = cost;
                best.scenario = o;
                best.failed = failed;
                best.serviced = bfs.serviced();
            }
        }
        best.scenario_objectives.push_back(scenario_best);
    }
    if (!best.cost.feasible)
        throw Error(Errc::InfeasibleProbes, "no disaster scenario admits a failure set consistent with the probes");
    best.initial = best.failed;
    best.initial_objective = best.cost.total;
    return best;
}

Solution run_algorithm(Algorithm algorithm, const InfraNetwork& net, const FailureProbTable& table,
                       const ProbeSet& probes, std::size_t exhaustive_edge_budget) {
    switch (algorithm) {
    case Algorithm::JointPathMap: return joint_path_map(net, table, probes);
    case Algorithm::ModelCost: return model_cost_baseline(net, table, probes);
    case Algorithm::OnlyConnectivity: return only_connectivity(net, table, probes);
    case Algorithm::Exhaustive: return exhaustive_optimal(net, table, probes, exhaustive_edge_budget);
    }
    throw Error(Errc::Config, "unknown algorithm");
}

std::vector<std::string> check_solution(const InfraNetwork& net, const ProbeSet& probes, const Solution& solution,
                                        double epsilon) {
    std::vector<std::string> issues;
    const std::string tag = std::string(to_string(solution.algorithm)) + ": ";
    if (uses_point_probes(solution.algorithm) && !probes.point.is_subset_of(solution.failed))
        issues.push_back(tag + "point probes missing from the inferred failure set");
    if (!probes.connectivity.is_subset_of(solution.serviced))
        issues.push_back(tag + "connectivity probe not serviced by the final solution");
    if (!(serviced_set(net, solution.failed) == solution.serviced))
        issues.push_back(tag + "stored serviced set disagrees with the failure set");
    if (!solution.cost.feasible || !std::isfinite(solution.cost.total))
        issues.push_back(tag + "final cost is not finite");

    if (solution.algorithm == Algorithm::Exhaustive)
        return issues;
    if (uses_point_probes(solution.algorithm) && !probes.point.is_subset_of(solution.initial))
        issues.push_back(tag + "greedy start set does not contain the point probes");

    EdgeSet replay = solution.initial;
    double previous = solution.initial_objective;
    std::size_t previous_zero = solution.initial_zero_prob_terms;
    if (!probes.connectivity.is_subset_of(serviced_set(net, replay)))
        issues.push_back(tag + "connectivity probe not serviced by the start set");
    for (std::size_t step = 0; step < solution.trace.size(); ++step) {
        const auto& [edge, value, zero_terms] = solution.trace[step];
        if (!replay.insert(edge))
            issues.push_back(tag + "step " + std::to_string(step) + " re-adds edge " + std::to_string(edge));
        if (!probes.connectivity.is_subset_of(serviced_set(net, replay)))
            issues.push_back(tag + "step " + std::to_string(step) + " disconnects a connectivity probe");
        const bool decreased =
            zero_terms != previous_zero ? zero_terms < previous_zero : value < previous - epsilon;
        if (!decreased)
            issues.push_back(tag + "step " + std::to_string(step) + " does not decrease the objective by > epsilon");
        previous = value;
        previous_zero = zero_terms;
    }
    if (solution.trace.size() == solution.iterations && !(replay == solution.failed))
        issues.push_back(tag + "trace does not reproduce the final failure set");
    return issues;
}

} // namespace netinfer
