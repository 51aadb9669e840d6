#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netinfer/id_set.hpp"
#include "netinfer/network.hpp"

namespace netinfer {

/// `paper`: F1 = p r / (p + r), no factor 2. `standard`: F1 = 2 p r / (p + r).
enum class F1Mode { Paper, Standard };

std::string_view to_string(F1Mode mode) noexcept;
F1Mode parse_f1_mode(std::string_view name);

struct Scores {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Precision and recall of `inferred` against `truth`, with the limit cases
///   inferred = truth = {} -> precision 1;  truth = {} -> recall 1;
///   inferred = {}, truth != {} -> precision 0;  p = r = 0 -> f1 0.
Scores score(const EdgeSet& truth, const EdgeSet& inferred, F1Mode mode = F1Mode::Paper);

/// Share of true failures that are undiscoverable from serviceability. Starting from
/// `inferred`, each edge of truth \ inferred (ascending id) is added whenever it
/// leaves the serviced set unchanged; returns the count added over |truth|, or 0
/// for an empty truth set.
double u_edge_proportion(const InfraNetwork& net, const EdgeSet& truth, const EdgeSet& inferred);

/// One result row per (trial, gamma_c, algorithm).
struct TrialRow {
    std::size_t trial_id = 0;
    std::uint64_t seed = 0;
    std::size_t true_scenario = 0;
    std::size_t inferred_scenario = 0;
    std::string algorithm;
    double gamma_c = 0.0;
    double gamma_i = 0.0;
    std::size_t true_failures = 0;
    std::size_t inferred_failures = 0;
    Scores scores;
    double u_edge_prop = 0.0;
    double mdl_total = 0.0;
    double mdl_model = 0.0;
    double mdl_data = 0.0;
    std::optional<double> optimal_mdl;
    std::optional<double> wall_ms;
};

struct Summary {
    std::size_t trials = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double u_edge_prop = 0.0;
    double mdl_total = 0.0;
    std::vector<TrialRow> rows;
};

/// Arithmetic means over trials. Throws EmptyTrialList.
Summary aggregate(const std::vector<TrialRow>& trials);

} // namespace netinfer
