#include "netinfer/evaluation.hpp"

#include "netinfer/serviceability.hpp"

namespace netinfer {

std::string_view to_string(F1Mode mode) noexcept { return mode == F1Mode::Paper ? "paper" : "standard"; }

F1Mode parse_f1_mode(std::string_view name) {
    if (name == "paper")
        return F1Mode::Paper;
    if (name == "standard")
        return F1Mode::Standard;
    throw Error(Errc::Config, "unknown f1 mode '" + std::string(name) + "' (expected paper|standard)");
}

Scores score(const EdgeSet& truth, const EdgeSet& inferred, F1Mode mode) {
    const auto hits = static_cast<double>(intersection_size(truth, inferred));
    Scores s;
    if (inferred.empty())
        s.precision = truth.empty() ? 1.0 : 0.0;
    else
        s.precision = hits / static_cast<double>(inferred.size());
    s.recall = truth.empty() ? 1.0 : hits / static_cast<double>(truth.size());

    const double sum = s.precision + s.recall;
    if (sum > 0.0) {
        const double scale = mode == F1Mode::Paper ? 1.0 : 2.0;
        s.f1 = scale * s.precision * s.recall / sum;
    }
    return s;
}

double u_edge_proportion(const InfraNetwork& net, const EdgeSet& truth, const EdgeSet& inferred) {
    if (truth.empty())
        return 0.0;
    BoundedBfs bfs(net);
    EdgeSet working = inferred;
    bfs.run(working);
    const NodeSet baseline = bfs.serviced();
    std::size_t added = 0;
    truth.for_each([&](EdgeId e) {
        if (working.contains(e))
            return;
        bfs.run(working, e);
        if (bfs.serviced() == baseline) {
            working.insert(e);
            ++added;
        }
    });
    return static_cast<double>(added) / static_cast<double>(truth.size());
}

Summary aggregate(const std::vector<TrialRow>& trials) {
    if (trials.empty())
        throw Error(Errc::EmptyTrialList, "cannot aggregate an empty trial list");
    Summary s;
    s.trials = trials.size();
    for (const auto& row : trials) {
        s.precision += row.scores.precision;
        s.recall += row.scores.recall;
        s.f1 += row.scores.f1;
        s.u_edge_prop += row.u_edge_prop;
        s.mdl_total += row.mdl_total;
    }
    const auto n = static_cast<double>(trials.size());
    s.precision /= n;
    s.recall /= n;
    s.f1 /= n;
    s.u_edge_prop /= n;
    s.mdl_total /= n;
    s.rows = trials;
    return s;
}

} // namespace netinfer
