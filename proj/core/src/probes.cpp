#include "netinfer/probes.hpp"

#include <string>

namespace netinfer {

void ProbeSet::validate() const {
    if (!(gamma_c >= 0.0 && gamma_c <= 1.0))
        throw Error(Errc::OutOfRangeProbability, "gamma_c = " + std::to_string(gamma_c) + " outside [0,1]");
    if (!(gamma_i >= 0.0 && gamma_i <= 1.0))
        throw Error(Errc::OutOfRangeProbability, "gamma_i = " + std::to_string(gamma_i) + " outside [0,1]");
}

ProbeSet sample_probes(const NodeSet& serviced, const EdgeSet& failed, double gamma_c, double gamma_i,
                       RandomSource& rng) {
    ProbeSet probes{NodeSet(serviced.universe()), EdgeSet(failed.universe()), gamma_c, gamma_i};
    probes.validate();
    serviced.for_each([&](NodeId n) {
        if (rng.bernoulli(gamma_c))
            probes.connectivity.insert(n);
    });
    failed.for_each([&](EdgeId e) {
        if (rng.bernoulli(gamma_i))
            probes.point.insert(e);
    });
    return probes;
}

} // namespace netinfer
