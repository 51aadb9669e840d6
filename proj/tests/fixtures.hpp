#pragma once

// Hand-built networks shared by the unit and acceptance suites.

#include <utility>
#include <vector>

#include <netinfer/hazard.hpp>
#include <netinfer/network.hpp>

namespace netinfer::testing {

using R = NodeRole;

inline std::vector<NodeSpec> roles(std::initializer_list<NodeRole> rs) {
    std::vector<NodeSpec> out;
    double x = 0.0;
    for (auto r : rs) {
        out.push_back({r, 35.0, -90.0 + x});
        x += 0.01;
    }
    return out;
}

/// Supply - transshipment - demand, L = 2.
inline InfraNetwork line_network() {
    return InfraNetwork::build(roles({R::Supply, R::Transshipment, R::Demand}), {{0, 1}, {1, 2}}, 2);
}

/// Power-network example: plant 0; towers 1, 3, 4; houses 2, 5, 6, 7, 8; L = 3.
/// Failing edges 3 (1-2), 6 (3-6), 8 (4-8) leaves {2, 5, 7} serviced and edge 3
/// is redundant because house 2 is also fed through tower 3.
inline InfraNetwork redundant_network() {
    return InfraNetwork::build(roles({R::Supply, R::Transshipment, R::Demand, R::Transshipment, R::Transshipment,
                                      R::Demand, R::Demand, R::Demand, R::Demand}),
                               {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 5}, {3, 6}, {4, 7}, {4, 8}, {5, 7}}, 3);
}
inline std::vector<EdgeId> redundant_network_failures() { return {3, 6, 8}; }

/// Supply hub 0 with demand leaves 1..3, L = 1. Every edge is critical.
inline InfraNetwork star_network() {
    return InfraNetwork::build(roles({R::Supply, R::Demand, R::Demand, R::Demand}), {{0, 1}, {0, 2}, {0, 3}}, 1);
}

/// 3x3 lattice, supply at opposite corners 0 and 8, centre transshipment, L = 2.
inline InfraNetwork small_grid_network() {
    auto nodes = roles({R::Supply, R::Demand, R::Demand, R::Demand, R::Transshipment, R::Demand, R::Demand,
                        R::Demand, R::Supply});
    return InfraNetwork::build(std::move(nodes),
                               {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {0, 3}, {3, 6}, {1, 4}, {4, 7},
                                {2, 5}, {5, 8}},
                               2);
}

/// 2x4 ladder with two diagonals, supply at 0, L = 3.
inline InfraNetwork ladder_network() {
    auto nodes = roles({R::Supply, R::Transshipment, R::Demand, R::Demand, R::Demand, R::Transshipment, R::Demand,
                        R::Demand});
    return InfraNetwork::build(std::move(nodes),
                               {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7},
                                {0, 5}, {2, 7}},
                               3);
}

/// Table with the given per-scenario priors and edge probabilities.
inline FailureProbTable make_table(std::vector<double> priors, const std::vector<std::vector<double>>& rows) {
    std::vector<double> flat;
    for (const auto& r : rows)
        flat.insert(flat.end(), r.begin(), r.end());
    const std::size_t m = rows.empty() ? 0 : rows.front().size();
    return FailureProbTable(std::move(priors), m, std::move(flat));
}

inline FailureProbTable uniform_table(const InfraNetwork& net, double p) {
    return make_table({1.0}, {std::vector<double>(net.edge_count(), p)});
}

} // namespace netinfer::testing
