#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <netinfer/evaluation.hpp>
#include <netinfer/hazard.hpp>
#include <netinfer/inference.hpp>
#include <netinfer/network.hpp>

namespace netinfer::app {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kDataError = 3,
    kInfeasibleProbes = 4,
};

int exit_code_for(const Error& e) noexcept;

struct ExperimentConfig {
    std::filesystem::path network;
    std::filesystem::path scenarios;
    std::filesystem::path fragility;
    std::filesystem::path output; // results CSV; empty writes to stdout
    std::vector<double> gamma_c{0.3};
    double gamma_i = 0.3;
    std::size_t trials = 30;
    std::uint64_t seed = 0;
    std::vector<Algorithm> algorithms{Algorithm::JointPathMap};
    F1Mode f1_mode = F1Mode::Paper;
    std::size_t oracle_edge_budget = kExhaustiveEdgeLimit;
    std::size_t workers = 1;
    bool timing = false; // wall_ms column; off keeps reruns byte-identical

    /// Throws Config on empty grids, zero trials, rates outside [0, 1] or no algorithms.
    void validate() const;
};

/// Reads a JSON config. Relative paths resolve against the config file's directory.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir);

/// Seed used when neither the config nor a flag sets one.
std::uint64_t default_seed();

struct PipelineInputs {
    const InfraNetwork& net;
    const ScenarioSet& scenarios;
    const FailureProbTable& table;
};

struct GroupSummary {
    std::string algorithm;
    double gamma_c = 0.0;
    Summary summary;
    double mdl_model = 0.0;
    double mdl_data = 0.0;
};

struct PipelineResult {
    std::vector<TrialRow> rows; // trial, then gamma_c, then algorithm order
    std::vector<GroupSummary> summaries;
    std::vector<std::string> violations; // solution invariant failures; expected empty
};

/// Simulates `trials` damage instances and runs every configured algorithm on each.
/// Trial t draws from seed derive_seed(config.seed, t), so rows do not depend on
/// the worker count.
PipelineResult run_pipeline(const PipelineInputs& inputs, const ExperimentConfig& config);

void write_results_csv(std::ostream& out, const PipelineResult& result);

/// Loads the files named by the config, runs the pipeline and writes CSV plus a
/// metadata sidecar (<output>.meta.json) when an output path is set.
PipelineResult cmd_pipeline(const ExperimentConfig& config, std::ostream& out);

/// Writes the scenario x edge failure-probability table as CSV.
void cmd_hazard(const std::filesystem::path& network, const std::filesystem::path& scenarios,
                const std::filesystem::path& fragility, std::ostream& out);

/// Writes a synthetic network file.
void cmd_gen_synthetic(const std::string& kind, std::size_t size, std::uint64_t seed, std::ostream& out,
                       std::optional<int> hop_bound = std::nullopt);

/// Runs one algorithm on a recorded probe file and writes the solution as JSON.
void cmd_infer(const std::filesystem::path& network, const std::filesystem::path& scenarios,
               const std::filesystem::path& fragility, const std::filesystem::path& probes, Algorithm algorithm,
               std::size_t edge_budget, std::ostream& out);

/// Draws one ground-truth instance and its probes; writes the probe file and
/// returns the truth as JSON.
std::string cmd_simulate(const std::filesystem::path& network, const std::filesystem::path& scenarios,
                         const std::filesystem::path& fragility, double gamma_c, double gamma_i, std::uint64_t seed,
                         std::ostream& probes_out);

/// Command-line entry point; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace netinfer::app
