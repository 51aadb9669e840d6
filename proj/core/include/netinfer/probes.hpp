#pragma once

#include "netinfer/id_set.hpp"
#include "netinfer/random.hpp"

namespace netinfer {

/// Observed connectivity probes (serviced demand nodes) and point probes (failed edges),
/// with the rates they were sampled at.
struct ProbeSet {
    NodeSet connectivity;
    EdgeSet point;
    double gamma_c = 0.0;
    double gamma_i = 0.0;

    /// Throws OutOfRangeProbability for rates outside [0, 1].
    void validate() const;
};

/// Each serviced node enters the connectivity probes with probability gamma_c and
/// each failed edge enters the point probes with probability gamma_i, independently,
/// in ascending id order (nodes first).
ProbeSet sample_probes(const NodeSet& serviced, const EdgeSet& failed, double gamma_c, double gamma_i,
                       RandomSource& rng);

} // namespace netinfer
