#pragma once

// Two-part MDL cost of a hypothesis (scenario o, serviced set S, failed edges I)
// against observed probes. All costs are in bits; +infinity marks hypotheses that
// are infeasible or assert a probability-zero event.

#include <cstddef>
#include <limits>

#include "netinfer/hazard.hpp"
#include "netinfer/id_set.hpp"
#include "netinfer/network.hpp"
#include "netinfer/probes.hpp"

namespace netinfer {

constexpr double kInfiniteBits = std::numeric_limits<double>::infinity();

/// Strict-decrease tolerance for cost comparisons.
constexpr double kCostEpsilon = 1e-9;

struct MdlCost {
    double model_cost = kInfiniteBits;
    double data_cost = kInfiniteBits;
    double total = kInfiniteBits;
    bool feasible = false;

    static MdlCost infeasible() { return {}; }
    static MdlCost of(double model, double data);
};

/// Which observation channels enter the data cost.
enum class DataTerms {
    Joint,            ///< point and connectivity probes
    ConnectivityOnly, ///< the point-probe channel does not exist
};

/// log2 of the binomial coefficient C(n, k), via log-gamma.
double log2_binomial(std::size_t n, std::size_t k);

/// Bits for `hits` inclusions and `misses` exclusions at rate gamma, both the size
/// and the content message: -2 hits log2(gamma) - 2 misses log2(1 - gamma), with
/// 0 log 0 = 0.
double bernoulli_bits(std::size_t hits, std::size_t misses, double gamma);

/// -log2 p(o) - log2(h * prod_{e in I} F(e|o) * prod_{e not in I} (1 - F(e|o))).
/// h is 1 exactly when serviced_set(net, failed) == serviced.
double model_cost(const InfraNetwork& net, const FailureProbTable& table, std::size_t scenario,
                  const EdgeSet& failed, const NodeSet& serviced);

/// Model cost without the feasibility check (h taken as 1).
double model_cost_unchecked(const FailureProbTable& table, std::size_t scenario, const EdgeSet& failed);

/// Data cost of sending the probes given (S, I). +infinity when the probes are not
/// contained in (S, I).
double data_cost(const NodeSet& serviced, const EdgeSet& failed, const ProbeSet& probes,
                 DataTerms terms = DataTerms::Joint);

/// Data cost from set sizes alone; containment must already hold.
double data_cost_from_sizes(std::size_t serviced, std::size_t connectivity_probes, std::size_t failed,
                            std::size_t point_probes, double gamma_c, double gamma_i,
                            DataTerms terms = DataTerms::Joint);

/// Full cost with S derived from `failed`.
MdlCost total_cost(const InfraNetwork& net, const FailureProbTable& table, std::size_t scenario,
                   const EdgeSet& failed, const ProbeSet& probes, DataTerms terms = DataTerms::Joint);

} // namespace netinfer
