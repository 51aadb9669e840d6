#include "app.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <netinfer/io.hpp>
#include <netinfer/probes.hpp>
#include <netinfer/random.hpp>
#include <netinfer/serviceability.hpp>
#include <netinfer/synthetic.hpp>

namespace netinfer::app {

using nlohmann::json;

int exit_code_for(const Error& e) noexcept {
    switch (e.code()) {
    case Errc::Config:
    case Errc::BadSize:
    case Errc::TooLarge: return kConfigError;
    case Errc::InfeasibleProbes: return kInfeasibleProbes;
    default: return kDataError;
    }
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string& msg) { throw Error(Errc::Config, msg); };
    if (gamma_c.empty())
        fail("gamma_c grid is empty");
    for (double g : gamma_c)
        if (!(g >= 0.0 && g <= 1.0))
            fail("gamma_c value " + std::to_string(g) + " outside [0,1]");
    if (!(gamma_i >= 0.0 && gamma_i <= 1.0))
        fail("gamma_i " + std::to_string(gamma_i) + " outside [0,1]");
    if (trials < 1)
        fail("trials must be >= 1");
    if (algorithms.empty())
        fail("no algorithms configured");
    if (workers < 1)
        fail("workers must be >= 1");
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("NETINFER_SEED")) {
        std::uint64_t v = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && ptr == s.data() + s.size())
            return v;
        throw Error(Errc::Config, "NETINFER_SEED='" + std::string(s) + "' is not an unsigned integer");
    }
    return 0;
}

ExperimentConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::Config, std::string("config: ") + e.what());
    }
    ExperimentConfig cfg;
    cfg.seed = default_seed();
    auto path = [&](const char* key) -> std::filesystem::path {
        std::filesystem::path p = doc.at(key).get<std::string>();
        return p.is_absolute() ? p : base_dir / p;
    };
    try {
        if (doc.contains("network"))
            cfg.network = path("network");
        if (doc.contains("scenarios"))
            cfg.scenarios = path("scenarios");
        if (doc.contains("fragility"))
            cfg.fragility = path("fragility");
        if (doc.contains("output"))
            cfg.output = path("output");
        if (doc.contains("gamma_c")) {
            const auto& g = doc.at("gamma_c");
            cfg.gamma_c = g.is_array() ? g.get<std::vector<double>>() : std::vector<double>{g.get<double>()};
        }
        if (doc.contains("gamma_i"))
            cfg.gamma_i = doc.at("gamma_i").get<double>();
        if (doc.contains("trials"))
            cfg.trials = doc.at("trials").get<std::size_t>();
        if (doc.contains("seed"))
            cfg.seed = doc.at("seed").get<std::uint64_t>();
        if (doc.contains("algorithms")) {
            cfg.algorithms.clear();
            for (const auto& a : doc.at("algorithms"))
                cfg.algorithms.push_back(parse_algorithm(a.get<std::string>()));
        }
        if (doc.contains("f1_mode"))
            cfg.f1_mode = parse_f1_mode(doc.at("f1_mode").get<std::string>());
        if (doc.contains("oracle_edge_budget"))
            cfg.oracle_edge_budget = doc.at("oracle_edge_budget").get<std::size_t>();
        if (doc.contains("workers"))
            cfg.workers = doc.at("workers").get<std::size_t>();
        if (doc.contains("timing"))
            cfg.timing = doc.at("timing").get<bool>();
    } catch (const json::exception& e) {
        throw Error(Errc::Config, std::string("config: ") + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::string text;
    try {
        text = io::read_file(path);
    } catch (const Error& e) {
        throw Error(Errc::Config, e.what());
    }
    return parse_config(text, path.parent_path());
}

namespace {

struct TrialOutput {
    std::vector<TrialRow> rows;
    std::vector<std::string> violations;
};

bool wants_oracle(const ExperimentConfig& config) {
    return std::find(config.algorithms.begin(), config.algorithms.end(), Algorithm::Exhaustive)
           != config.algorithms.end();
}

TrialOutput run_trial(const PipelineInputs& in, const ExperimentConfig& config, std::size_t trial) {
    const std::uint64_t child = derive_seed(config.seed, trial);
    SeededRandom scenario_rng(derive_seed(child, "scenario"));
    SeededRandom damage_rng(derive_seed(child, "damage"));
    const std::size_t true_scenario = sample_scenario(in.scenarios, scenario_rng);
    const EdgeSet truth = sample_damage(in.table, true_scenario, damage_rng);
    const NodeSet serviced = serviced_set(in.net, truth);

    TrialOutput out;
    const std::uint64_t probe_seed = derive_seed(child, "probes");
    for (std::size_t g = 0; g < config.gamma_c.size(); ++g) {
        SeededRandom probe_rng(derive_seed(probe_seed, g));
        const ProbeSet probes = sample_probes(serviced, truth, config.gamma_c[g], config.gamma_i, probe_rng);

        std::vector<Solution> solutions;
        std::vector<double> elapsed;
        std::optional<double> optimal;
        for (Algorithm algorithm : config.algorithms) {
            const auto start = std::chrono::steady_clock::now();
            solutions.push_back(run_algorithm(algorithm, in.net, in.table, probes, config.oracle_edge_budget));
            elapsed.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
            if (algorithm == Algorithm::Exhaustive)
                optimal = solutions.back().cost.total;
            for (auto& v : check_solution(in.net, probes, solutions.back()))
                out.violations.push_back("trial " + std::to_string(trial) + ": " + v);
        }
        for (std::size_t a = 0; a < solutions.size(); ++a) {
            const auto& sol = solutions[a];
            TrialRow row;
            row.trial_id = trial;
            row.seed = child;
            row.true_scenario = true_scenario;
            row.inferred_scenario = sol.scenario;
            row.algorithm = std::string(to_string(sol.algorithm));
            row.gamma_c = config.gamma_c[g];
            row.gamma_i = config.gamma_i;
            row.true_failures = truth.size();
            row.inferred_failures = sol.failed.size();
            row.scores = score(truth, sol.failed, config.f1_mode);
            row.u_edge_prop = u_edge_proportion(in.net, truth, sol.failed);
            row.mdl_total = sol.cost.total;
            row.mdl_model = sol.cost.model_cost;
            row.mdl_data = sol.cost.data_cost;
            row.optimal_mdl = optimal;
            if (config.timing)
                row.wall_ms = elapsed[a];
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

std::string num(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

} // namespace

PipelineResult run_pipeline(const PipelineInputs& in, const ExperimentConfig& config) {
    config.validate();
    if (wants_oracle(config) && in.net.edge_count() > std::min(config.oracle_edge_budget, kExhaustiveEdgeLimit))
        throw Error(Errc::Config, "exhaustive oracle requested but |E| = " + std::to_string(in.net.edge_count())
                                      + " exceeds the oracle edge budget");

    std::vector<TrialOutput> outputs(config.trials);
    std::vector<std::exception_ptr> failures(config.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < config.trials; t = next++) {
            try {
                outputs[t] = run_trial(in, config, t);
            } catch (...) {
                failures[t] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::min(config.workers, config.trials);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }

    PipelineResult result;
    for (std::size_t t = 0; t < config.trials; ++t) {
        if (failures[t]) {
            try {
                std::rethrow_exception(failures[t]);
            } catch (const Error& e) {
                throw Error(e.code(), "trial " + std::to_string(t) + ": " + e.what());
            }
        }
        for (auto& row : outputs[t].rows)
            result.rows.push_back(std::move(row));
        for (auto& v : outputs[t].violations)
            result.violations.push_back(std::move(v));
    }

    for (double gc : config.gamma_c)
        for (Algorithm a : config.algorithms) {
            const std::string name(to_string(a));
            std::vector<TrialRow> group;
            for (const auto& row : result.rows)
                if (row.gamma_c == gc && row.algorithm == name)
                    group.push_back(row);
            GroupSummary gs{name, gc, aggregate(group)};
            for (const auto& row : group) {
                gs.mdl_model += row.mdl_model;
                gs.mdl_data += row.mdl_data;
            }
            gs.mdl_model /= static_cast<double>(group.size());
            gs.mdl_data /= static_cast<double>(group.size());
            result.summaries.push_back(std::move(gs));
        }
    return result;
}

void write_results_csv(std::ostream& out, const PipelineResult& result) {
    out << "trial_id,seed,true_scenario,inferred_scenario,algorithm,gamma_c,gamma_i,|I|,|Ihat|,precision,recall,f1,"
           "u_edge_prop,mdl_total,mdl_model,mdl_data,optimal_mdl,wall_ms\n";
    for (const auto& r : result.rows) {
        out << r.trial_id << ',' << r.seed << ',' << r.true_scenario << ',' << r.inferred_scenario << ','
            << r.algorithm << ',' << num(r.gamma_c) << ',' << num(r.gamma_i) << ',' << r.true_failures << ','
            << r.inferred_failures << ',' << num(r.scores.precision) << ',' << num(r.scores.recall) << ','
            << num(r.scores.f1) << ',' << num(r.u_edge_prop) << ',' << num(r.mdl_total) << ',' << num(r.mdl_model)
            << ',' << num(r.mdl_data) << ',' << (r.optimal_mdl ? num(*r.optimal_mdl) : "") << ','
            << (r.wall_ms ? num(*r.wall_ms) : "") << '\n';
    }
    // Summary rows: trial_id "mean", per-trial-only columns left blank.
    for (const auto& g : result.summaries) {
        const auto& s = g.summary;
        double gamma_i = s.rows.empty() ? 0.0 : s.rows.front().gamma_i;
        out << "mean,,,," << g.algorithm << ',' << num(g.gamma_c) << ',' << num(gamma_i) << ",,,"
            << num(s.precision) << ',' << num(s.recall) << ',' << num(s.f1) << ',' << num(s.u_edge_prop) << ','
            << num(g.mdl_model + g.mdl_data) << ',' << num(g.mdl_model) << ',' << num(g.mdl_data) << ",,\n";
    }
}

PipelineResult cmd_pipeline(const ExperimentConfig& config, std::ostream& out) {
    config.validate();
    if (config.network.empty() || config.scenarios.empty() || config.fragility.empty())
        throw Error(Errc::Config, "pipeline needs network, scenarios and fragility paths");
    const InfraNetwork net = io::load_network(config.network);
    bool uniform_priors = false;
    const ScenarioSet scenarios = io::load_scenarios(config.scenarios, &uniform_priors);
    const FailureProbTable table = failure_prob_table(net, scenarios, io::load_fragility(config.fragility));

    PipelineResult result = run_pipeline({net, scenarios, table}, config);

    std::ostringstream csv;
    write_results_csv(csv, result);
    if (config.output.empty()) {
        out << csv.str();
    } else {
        io::write_file(config.output, csv.str());
        json meta;
        meta["network"] = config.network.string();
        meta["scenarios"] = config.scenarios.string();
        meta["fragility"] = config.fragility.string();
        meta["seed"] = config.seed;
        meta["trials"] = config.trials;
        meta["gamma_c"] = config.gamma_c;
        meta["gamma_i"] = config.gamma_i;
        meta["f1_mode"] = std::string(to_string(config.f1_mode));
        meta["algorithms"] = json::array();
        for (auto a : config.algorithms)
            meta["algorithms"].push_back(std::string(to_string(a)));
        meta["priors"] = uniform_priors ? "uniform (not given in scenario file)" : "from scenario file";
        meta["invariant_violations"] = result.violations.size();
        io::write_file(config.output.string() + ".meta.json", meta.dump(2) + "\n");
    }
    return result;
}

void cmd_hazard(const std::filesystem::path& network, const std::filesystem::path& scenarios,
                const std::filesystem::path& fragility, std::ostream& out) {
    const InfraNetwork net = io::load_network(network);
    const FailureProbTable table =
        failure_prob_table(net, io::load_scenarios(scenarios), io::load_fragility(fragility));
    io::write_table_csv(out, table);
}

void cmd_gen_synthetic(const std::string& kind, std::size_t size, std::uint64_t seed, std::ostream& out,
                       std::optional<int> hop_bound) {
    out << io::network_to_json(generate_synthetic(parse_synthetic_kind(kind), size, seed, hop_bound));
}

void cmd_infer(const std::filesystem::path& network, const std::filesystem::path& scenarios,
               const std::filesystem::path& fragility, const std::filesystem::path& probes, Algorithm algorithm,
               std::size_t edge_budget, std::ostream& out) {
    const InfraNetwork net = io::load_network(network);
    const FailureProbTable table =
        failure_prob_table(net, io::load_scenarios(scenarios), io::load_fragility(fragility));
    const ProbeSet observed = io::load_probes(probes, net);
    out << io::solution_to_json(net, run_algorithm(algorithm, net, table, observed, edge_budget));
}

std::string cmd_simulate(const std::filesystem::path& network, const std::filesystem::path& scenarios,
                         const std::filesystem::path& fragility, double gamma_c, double gamma_i, std::uint64_t seed,
                         std::ostream& probes_out) {
    const InfraNetwork net = io::load_network(network);
    const ScenarioSet scenario_set = io::load_scenarios(scenarios);
    const FailureProbTable table = failure_prob_table(net, scenario_set, io::load_fragility(fragility));
    SeededRandom scenario_rng(derive_seed(seed, "scenario"));
    SeededRandom damage_rng(derive_seed(seed, "damage"));
    SeededRandom probe_rng(derive_seed(seed, "probes"));
    const std::size_t o = sample_scenario(scenario_set, scenario_rng);
    const EdgeSet truth = sample_damage(table, o, damage_rng);
    const NodeSet serviced = serviced_set(net, truth);
    probes_out << io::probes_to_json(sample_probes(serviced, truth, gamma_c, gamma_i, probe_rng));
    json doc;
    doc["scenario"] = o;
    doc["failed_edges"] = truth.ids();
    doc["serviced"] = serviced.ids();
    return doc.dump(2) + "\n";
}

namespace {

// Writes to `path`, or to `fallback` when the path is empty.
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
    if (path.empty()) {
        fn(fallback);
        return;
    }
    std::ostringstream buffer;
    fn(buffer);
    io::write_file(path, buffer.str());
}

} // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App cli{"Infer failed infrastructure edges from connectivity and point probes"};
    cli.require_subcommand(1);

    std::string network, scenarios, fragility, probes, output;

    auto* hazard = cli.add_subcommand("hazard", "Compute the scenario x edge failure-probability table (CSV)");
    hazard->add_option("--network", network, "Network JSON")->required();
    hazard->add_option("--scenarios", scenarios, "Scenario JSON")->required();
    hazard->add_option("--fragility", fragility, "Fragility JSON")->required();
    hazard->add_option("-o,--out", output, "Output CSV (default stdout)");

    std::string config_path;
    ExperimentConfig flags;
    std::vector<std::string> algorithm_names;
    std::string f1_mode;
    auto* pipeline = cli.add_subcommand("pipeline", "Run the seeded simulation and evaluation experiment");
    pipeline->add_option("--config", config_path, "Experiment config JSON");
    auto* o_network = pipeline->add_option("--network", network, "Network JSON");
    auto* o_scenarios = pipeline->add_option("--scenarios", scenarios, "Scenario JSON");
    auto* o_fragility = pipeline->add_option("--fragility", fragility, "Fragility JSON");
    auto* o_gamma_c = pipeline->add_option("--gamma-c", flags.gamma_c, "Connectivity probe rates");
    auto* o_gamma_i = pipeline->add_option("--gamma-i", flags.gamma_i, "Point probe rate");
    auto* o_trials = pipeline->add_option("--trials", flags.trials, "Number of damage trials");
    auto* o_seed = pipeline->add_option("--seed", flags.seed, "Root seed");
    auto* o_algorithms = pipeline->add_option("--algorithms", algorithm_names,
                                              "jointpathmap|modelcost|onlyconnectivity|exhaustive");
    auto* o_f1 = pipeline->add_option("--f1-mode", f1_mode, "paper|standard");
    auto* o_budget = pipeline->add_option("--oracle-edge-budget", flags.oracle_edge_budget, "Max |E| for the oracle");
    auto* o_workers = pipeline->add_option("--workers", flags.workers, "Worker threads");
    auto* o_timing = pipeline->add_flag("--timing", flags.timing, "Fill the wall_ms column");
    auto* o_out = pipeline->add_option("-o,--out", output, "Results CSV (default stdout)");

    std::string kind;
    std::size_t size = 0;
    std::uint64_t seed = 0;
    auto* gen = cli.add_subcommand("gen-synthetic", "Write a synthetic network file");
    gen->add_option("--kind", kind, "grid|ring|star|random")->required();
    gen->add_option("--size", size, "Grid side, ring/star/random node count")->required();
    gen->add_option("--seed", seed, "Seed for role assignment");
    std::optional<int> hop_bound;
    gen->add_option("--hop-bound", hop_bound, "Override the default service hop bound L");
    gen->add_option("-o,--out", output, "Output JSON (default stdout)");

    std::string algorithm = "jointpathmap";
    std::size_t budget = kExhaustiveEdgeLimit;
    auto* infer = cli.add_subcommand("infer", "Infer the failure set for one recorded probe file");
    auto* oracle = cli.add_subcommand("oracle", "Exact MDL minimiser by exhaustive search (small networks)");
    for (auto* sub : {infer, oracle}) {
        sub->add_option("--network", network, "Network JSON")->required();
        sub->add_option("--scenarios", scenarios, "Scenario JSON")->required();
        sub->add_option("--fragility", fragility, "Fragility JSON")->required();
        sub->add_option("--probes", probes, "Probe JSON")->required();
        sub->add_option("--oracle-edge-budget", budget, "Max |E| for exhaustive search");
        sub->add_option("-o,--out", output, "Solution JSON (default stdout)");
    }
    infer->add_option("--algorithm", algorithm, "jointpathmap|modelcost|onlyconnectivity|exhaustive");

    double gamma_c = 0.3, gamma_i = 0.3;
    std::string truth_out;
    auto* simulate = cli.add_subcommand("simulate", "Draw one damage instance and write its probes");
    simulate->add_option("--network", network, "Network JSON")->required();
    simulate->add_option("--scenarios", scenarios, "Scenario JSON")->required();
    simulate->add_option("--fragility", fragility, "Fragility JSON")->required();
    simulate->add_option("--gamma-c", gamma_c, "Connectivity probe rate");
    simulate->add_option("--gamma-i", gamma_i, "Point probe rate");
    simulate->add_option("--seed", seed, "Seed");
    simulate->add_option("-o,--out", output, "Probe JSON (default stdout)");
    simulate->add_option("--truth", truth_out, "Ground-truth JSON output");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*hazard) {
            emit(output, out, [&](std::ostream& s) { cmd_hazard(network, scenarios, fragility, s); });
        } else if (*pipeline) {
            ExperimentConfig cfg;
            if (!config_path.empty())
                cfg = load_config(config_path);
            else
                cfg.seed = default_seed();
            if (o_network->count())
                cfg.network = network;
            if (o_scenarios->count())
                cfg.scenarios = scenarios;
            if (o_fragility->count())
                cfg.fragility = fragility;
            if (o_gamma_c->count())
                cfg.gamma_c = flags.gamma_c;
            if (o_gamma_i->count())
                cfg.gamma_i = flags.gamma_i;
            if (o_trials->count())
                cfg.trials = flags.trials;
            if (o_seed->count())
                cfg.seed = flags.seed;
            if (o_algorithms->count()) {
                cfg.algorithms.clear();
                for (const auto& name : algorithm_names)
                    cfg.algorithms.push_back(parse_algorithm(name));
            }
            if (o_f1->count())
                cfg.f1_mode = parse_f1_mode(f1_mode);
            if (o_budget->count())
                cfg.oracle_edge_budget = flags.oracle_edge_budget;
            if (o_workers->count())
                cfg.workers = flags.workers;
            if (o_timing->count())
                cfg.timing = flags.timing;
            if (o_out->count())
                cfg.output = output;
            const auto result = cmd_pipeline(cfg, out);
            if (!result.violations.empty()) {
                for (const auto& v : result.violations)
                    err << "invariant violation: " << v << '\n';
                return kDataError;
            }
        } else if (*gen) {
            emit(output, out, [&](std::ostream& s) { cmd_gen_synthetic(kind, size, seed, s, hop_bound); });
        } else if (*infer || *oracle) {
            const Algorithm a = *oracle ? Algorithm::Exhaustive : parse_algorithm(algorithm);
            emit(output, out, [&](std::ostream& s) { cmd_infer(network, scenarios, fragility, probes, a, budget, s); });
        } else if (*simulate) {
            std::string truth;
            emit(output, out, [&](std::ostream& s) {
                truth = cmd_simulate(network, scenarios, fragility, gamma_c, gamma_i, seed, s);
            });
            if (!truth_out.empty())
                io::write_file(truth_out, truth);
        }
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kOk;
}

} // namespace netinfer::app
