#include "netinfer/mdl.hpp"

#include <cmath>
#include <numbers>

#include "netinfer/serviceability.hpp"

namespace netinfer {

MdlCost MdlCost::of(double model, double data) {
    if (!std::isfinite(model) || !std::isfinite(data))
        return infeasible();
    return {model, data, model + data, true};
}

double log2_binomial(std::size_t n, std::size_t k) {
    if (k > n)
        throw Error(Errc::InvalidParameter, "binomial C(" + std::to_string(n) + ", " + std::to_string(k) + ")");
    if (k == 0 || k == n)
        return 0.0;
    const double ln = std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0)
                      - std::lgamma(static_cast<double>(n - k) + 1.0);
    return ln / std::numbers::ln2;
}

double bernoulli_bits(std::size_t hits, std::size_t misses, double gamma) {
    double bits = 0.0;
    if (hits > 0) {
        if (gamma <= 0.0)
            return kInfiniteBits;
        bits -= 2.0 * static_cast<double>(hits) * std::log2(gamma);
    }
    if (misses > 0) {
        if (gamma >= 1.0)
            return kInfiniteBits;
        bits -= 2.0 * static_cast<double>(misses) * std::log2(1.0 - gamma);
    }
    return bits;
}

double model_cost_unchecked(const FailureProbTable& table, std::size_t scenario, const EdgeSet& failed) {
    const double prior = table.prior(scenario);
    if (prior <= 0.0)
        return kInfiniteBits;
    double bits = -std::log2(prior);
    const auto row = table.row(scenario);
    for (EdgeId e = 0; e < row.size(); ++e) {
        const double p = failed.contains(e) ? row[e] : 1.0 - row[e];
        if (p <= 0.0)
            return kInfiniteBits;
        bits -= std::log2(p);
    }
    return bits;
}

double model_cost(const InfraNetwork& net, const FailureProbTable& table, std::size_t scenario,
                  const EdgeSet& failed, const NodeSet& serviced) {
    if (!(serviced_set(net, failed) == serviced))
        return kInfiniteBits;
    return model_cost_unchecked(table, scenario, failed);
}

double data_cost_from_sizes(std::size_t serviced, std::size_t connectivity_probes, std::size_t failed,
                            std::size_t point_probes, double gamma_c, double gamma_i, DataTerms terms) {
    double bits = 0.0;
    if (terms == DataTerms::Joint) {
        bits -= log2_binomial(failed, point_probes);
        bits += bernoulli_bits(point_probes, failed - point_probes, gamma_i);
    }
    bits -= log2_binomial(serviced, connectivity_probes);
    bits += bernoulli_bits(connectivity_probes, serviced - connectivity_probes, gamma_c);
    return bits;
}

double data_cost(const NodeSet& serviced, const EdgeSet& failed, const ProbeSet& probes, DataTerms terms) {
    if (!probes.connectivity.is_subset_of(serviced))
        return kInfiniteBits;
    if (terms == DataTerms::Joint && !probes.point.is_subset_of(failed))
        return kInfiniteBits;
    return data_cost_from_sizes(serviced.size(), probes.connectivity.size(), failed.size(), probes.point.size(),
                                probes.gamma_c, probes.gamma_i, terms);
}

MdlCost total_cost(const InfraNetwork& net, const FailureProbTable& table, std::size_t scenario,
                   const EdgeSet& failed, const ProbeSet& probes, DataTerms terms) {
    const NodeSet serviced = serviced_set(net, failed);
    return MdlCost::of(model_cost_unchecked(table, scenario, failed), data_cost(serviced, failed, probes, terms));
}

} // namespace netinfer
