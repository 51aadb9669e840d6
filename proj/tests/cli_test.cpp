#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "../tools/app.hpp"
#include "temp_dir.hpp"

namespace netinfer::app {
namespace {

using testing::TempDir;

constexpr const char* kTwoEdge = R"({"L": 2,
  "nodes": [{"id": 0, "role": "supply", "lat": 35.0, "lon": -90.0},
            {"id": 1, "role": "demand", "lat": 35.0, "lon": -89.95},
            {"id": 2, "role": "demand", "lat": 35.0, "lon": -89.9}],
  "edges": [{"id": 0, "u": 0, "v": 1}, {"id": 1, "u": 1, "v": 2}]})";
constexpr const char* kOneScenario = R"({"scenarios": [{"epicenter": [35.0, -89.95], "magnitude": 6.5, "prior": 1.0}]})";
constexpr const char* kGate = R"({"supply": "invulnerable", "demand": {"median_pga": 0.47, "beta": 0.4}})";
constexpr const char* kNothingBreaks = R"({"supply": "invulnerable", "demand": "invulnerable"})";
constexpr const char* kGridScenarios = R"({"scenarios": [
  {"epicenter": [35.0, -90.0], "magnitude": 6.2},
  {"epicenter": [35.1, -89.9], "magnitude": 6.4},
  {"epicenter": [35.15, -89.85], "magnitude": 6.0}]})";
constexpr const char* kGridFragility = R"({"supply": "invulnerable", "demand": {"median_pga": 1.15, "beta": 0.6}})";

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');)
        out.push_back(f);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "netinfer");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct GridFiles {
    TempDir dir;
    std::filesystem::path network, scenarios, fragility;
    GridFiles() {
        std::ostringstream net;
        cmd_gen_synthetic("grid", 4, 3, net);
        network = dir.write("grid.json", net.str());
        scenarios = dir.write("scenarios.json", kGridScenarios);
        fragility = dir.write("fragility.json", kGridFragility);
    }
    ExperimentConfig config(std::size_t trials, std::vector<Algorithm> algorithms) const {
        ExperimentConfig c;
        c.network = network;
        c.scenarios = scenarios;
        c.fragility = fragility;
        c.trials = trials;
        c.seed = 1234;
        c.algorithms = std::move(algorithms);
        return c;
    }
};

std::string pipeline_csv(const ExperimentConfig& c) {
    std::ostringstream out;
    cmd_pipeline(c, out);
    return out.str();
}

TEST(Hazard, TwoEdgeNetworkOneScenario) {
    TempDir dir;
    std::ostringstream out;
    cmd_hazard(dir.write("n.json", kTwoEdge), dir.write("s.json", kOneScenario), dir.write("f.json", kGate), out);
    auto rows = lines(out.str());
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "scenario_id,edge_id,prob");
    EXPECT_EQ(rows[1].rfind("0,0,", 0), 0u);
    EXPECT_EQ(rows[2].rfind("0,1,", 0), 0u);
    EXPECT_GT(std::stod(fields(rows[1])[2]), 0.0);
}

TEST(Hazard, InvulnerableEverywhereGivesZeros) {
    TempDir dir;
    std::ostringstream out;
    cmd_hazard(dir.write("n.json", kTwoEdge), dir.write("s.json", kOneScenario), dir.write("f.json", kNothingBreaks),
               out);
    EXPECT_EQ(out.str(), "scenario_id,edge_id,prob\n0,0,0\n0,1,0\n");
}

TEST(Hazard, RegenerationIsByteIdentical) {
    GridFiles g;
    std::ostringstream a, b;
    cmd_hazard(g.network, g.scenarios, g.fragility, a);
    cmd_hazard(g.network, g.scenarios, g.fragility, b);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(lines(a.str()).size(), 1u + 3u * 24u);
}

TEST(Pipeline, RowCounts) {
    GridFiles g;
    auto two = lines(pipeline_csv(g.config(30, {Algorithm::JointPathMap, Algorithm::OnlyConnectivity})));
    ASSERT_EQ(two.size(), 1u + 60u + 2u);
    EXPECT_EQ(two[0], "trial_id,seed,true_scenario,inferred_scenario,algorithm,gamma_c,gamma_i,|I|,|Ihat|,precision,"
                      "recall,f1,u_edge_prop,mdl_total,mdl_model,mdl_data,optimal_mdl,wall_ms");
    EXPECT_EQ(fields(two[61])[0], "mean");
    EXPECT_EQ(fields(two[62])[0], "mean");
    auto one = lines(pipeline_csv(g.config(30, {Algorithm::JointPathMap})));
    ASSERT_EQ(one.size(), 1u + 30u + 1u);
    auto grid = g.config(5, {Algorithm::JointPathMap, Algorithm::ModelCost});
    grid.gamma_c = {0.1, 0.5, 0.9};
    EXPECT_EQ(lines(pipeline_csv(grid)).size(), 1u + 30u + 6u);
}

TEST(Pipeline, FullObservationIsPerfect) {
    GridFiles g;
    auto c = g.config(30, {Algorithm::JointPathMap});
    c.gamma_c = {1.0};
    c.gamma_i = 1.0;
    auto result = run_pipeline(
        {io::load_network(g.network), io::load_scenarios(g.scenarios),
         failure_prob_table(io::load_network(g.network), io::load_scenarios(g.scenarios), io::load_fragility(g.fragility))},
        c);
    ASSERT_EQ(result.rows.size(), 30u);
    for (const auto& r : result.rows) {
        EXPECT_EQ(r.scores.precision, 1.0);
        EXPECT_EQ(r.scores.recall, 1.0);
    }
    EXPECT_TRUE(result.violations.empty());
}

TEST(Pipeline, DeterministicAcrossRunsAndWorkers) {
    GridFiles g;
    auto c = g.config(20, {Algorithm::JointPathMap, Algorithm::ModelCost, Algorithm::OnlyConnectivity});
    c.gamma_c = {0.2, 0.6};
    const auto first = pipeline_csv(c);
    EXPECT_EQ(pipeline_csv(c), first);
    c.workers = 4;
    EXPECT_EQ(pipeline_csv(c), first);
    c.seed = 1235;
    EXPECT_NE(pipeline_csv(c), first);
}

TEST(Pipeline, CostColumnsAddUp) {
    GridFiles g;
    auto rows = lines(pipeline_csv(g.config(15, {Algorithm::JointPathMap, Algorithm::OnlyConnectivity,
                                                 Algorithm::ModelCost})));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto f = fields(rows[i]);
        ASSERT_EQ(f.size(), 18u) << rows[i];
        EXPECT_NEAR(std::stod(f[13]), std::stod(f[14]) + std::stod(f[15]), 1e-6) << rows[i];
        EXPECT_EQ(f[17], "");
    }
}

TEST(Pipeline, OracleColumnAndBudget) {
    TempDir dir;
    std::ostringstream net;
    cmd_gen_synthetic("grid", 3, 1, net);
    auto c = GridFiles().config(4, {Algorithm::JointPathMap, Algorithm::Exhaustive});
    c.network = dir.write("g3.json", net.str());
    c.scenarios = dir.write("s.json", kGridScenarios);
    c.fragility = dir.write("f.json", kGridFragility);
    auto rows = lines(pipeline_csv(c));
    ASSERT_EQ(rows.size(), 1u + 8u + 2u);
    for (std::size_t i = 1; i <= 8; ++i) {
        auto f = fields(rows[i]);
        ASSERT_FALSE(f[16].empty());
        EXPECT_LE(std::stod(f[16]), std::stod(f[13]) + 1e-9);
    }
    c.oracle_edge_budget = 10;
    try {
        pipeline_csv(c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(exit_code_for(e), kConfigError);
    }
}

TEST(Pipeline, MetadataSidecar) {
    GridFiles g;
    auto c = g.config(2, {Algorithm::JointPathMap});
    c.output = g.dir.path() / "results.csv";
    std::ostringstream ignored;
    cmd_pipeline(c, ignored);
    auto meta = nlohmann::json::parse(io::read_file(g.dir.path() / "results.csv.meta.json"));
    EXPECT_EQ(meta.at("f1_mode"), "paper");
    EXPECT_NE(meta.at("priors").get<std::string>().find("uniform"), std::string::npos);
    EXPECT_EQ(meta.at("invariant_violations"), 0);
}

TEST(Config, ParseAndValidate) {
    TempDir dir;
    auto cfg = parse_config(R"({"network": "n.json", "scenarios": "/abs/s.json", "fragility": "f.json",
                                "gamma_c": 0.4, "trials": 3, "seed": 9, "algorithms": ["modelcost", "exhaustive"],
                                "f1_mode": "standard"})",
                            dir.path());
    EXPECT_EQ(cfg.network, dir.path() / "n.json");
    EXPECT_EQ(cfg.scenarios, "/abs/s.json");
    EXPECT_EQ(cfg.gamma_c, std::vector<double>{0.4});
    EXPECT_EQ(cfg.trials, 3u);
    EXPECT_EQ(cfg.seed, 9u);
    EXPECT_EQ(cfg.algorithms, (std::vector<Algorithm>{Algorithm::ModelCost, Algorithm::Exhaustive}));
    EXPECT_EQ(cfg.f1_mode, F1Mode::Standard);
    EXPECT_EQ(parse_config(R"({"gamma_c": [0.1, 0.9]})", dir.path()).gamma_c, (std::vector<double>{0.1, 0.9}));
    for (const char* bad : {R"({"trials": 0})", R"({"gamma_c": []})", R"({"gamma_i": 2})", R"({"algorithms": ["ilp"]})",
                            R"({"algorithms": []})", R"({"trials": "many"})"}) {
        try {
            parse_config(bad, dir.path()).validate();
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(exit_code_for(e), kConfigError) << bad;
        }
    }
}

TEST(GenSynthetic, Shapes) {
    auto grid = io::parse_network([] {
        std::ostringstream s;
        cmd_gen_synthetic("grid", 3, 7, s);
        return s.str();
    }());
    EXPECT_EQ(grid.node_count(), 9u);
    EXPECT_EQ(grid.edge_count(), 12u);
    auto star = io::parse_network([] {
        std::ostringstream s;
        cmd_gen_synthetic("star", 5, 7, s);
        return s.str();
    }());
    EXPECT_EQ(star.supply_nodes().size(), 1u);
    EXPECT_EQ(star.demand_nodes().size(), 4u);
    EXPECT_EQ(star.edge_count(), 4u);
    for (const char* kind : {"grid", "ring", "star", "random"}) {
        std::ostringstream a, b;
        cmd_gen_synthetic(kind, 6, 42, a);
        cmd_gen_synthetic(kind, 6, 42, b);
        EXPECT_EQ(a.str(), b.str()) << kind;
        EXPECT_NO_THROW(io::parse_network(a.str())) << kind;
    }
    try {
        std::ostringstream s;
        cmd_gen_synthetic("grid", 2, 1, s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BadSize);
    }
}

TEST(Cli, ExitCodes) {
    TempDir dir;
    const auto net = dir.write("n.json", kTwoEdge).string();
    const auto sc = dir.write("s.json", kOneScenario).string();
    const auto fr = dir.write("f.json", kGate).string();
    EXPECT_EQ(cli({"gen-synthetic", "--kind", "star", "--size", "4"}).code, kOk);
    EXPECT_EQ(cli({"gen-synthetic", "--kind", "star", "--size", "2"}).code, kConfigError);
    EXPECT_EQ(cli({"gen-synthetic", "--kind", "torus", "--size", "4"}).code, kConfigError);
    EXPECT_EQ(cli({"frobnicate"}).code, kConfigError);
    EXPECT_EQ(cli({"hazard", "--network", net}).code, kConfigError);
    EXPECT_EQ(cli({"hazard", "--network", net, "--scenarios", sc, "--fragility", fr}).code, kOk);
    auto missing = cli({"hazard", "--network", (dir.path() / "none.json").string(), "--scenarios", sc, "--fragility", fr});
    EXPECT_EQ(missing.code, kDataError);
    EXPECT_NE(missing.err.find("none.json"), std::string::npos);
    EXPECT_EQ(cli({"pipeline", "--network", net, "--scenarios", sc, "--fragility", fr, "--trials", "0"}).code,
              kConfigError);

    // Node 2 must be serviced, but edge 1 is asserted failed.
    const auto probes = dir.write("p.json", R"({"qc": [2], "qi": [1], "gamma_c": 0.5, "gamma_i": 0.5})").string();
    auto infeasible = cli({"infer", "--network", net, "--scenarios", sc, "--fragility", fr, "--probes", probes});
    EXPECT_EQ(infeasible.code, kInfeasibleProbes);
    const auto ok_probes = dir.write("q.json", R"({"qc": [1], "qi": [1], "gamma_c": 0.5, "gamma_i": 0.5})").string();
    auto solved = cli({"infer", "--network", net, "--scenarios", sc, "--fragility", fr, "--probes", ok_probes});
    ASSERT_EQ(solved.code, kOk) << solved.err;
    EXPECT_NE(solved.out.find("failed_edges"), std::string::npos);
    EXPECT_EQ(cli({"oracle", "--network", net, "--scenarios", sc, "--fragility", fr, "--probes", ok_probes}).code, kOk);
}

TEST(Cli, PipelineFlagsAndFileOutput) {
    GridFiles g;
    const auto out = (g.dir.path() / "r.csv").string();
    auto run = cli({"pipeline", "--network", g.network.string(), "--scenarios", g.scenarios.string(), "--fragility",
                    g.fragility.string(), "--trials", "3", "--seed", "5", "--algorithms", "jointpathmap", "modelcost",
                    "--gamma-c", "0.2", "0.4", "-o", out});
    ASSERT_EQ(run.code, kOk) << run.err;
    EXPECT_EQ(lines(io::read_file(out)).size(), 1u + 12u + 4u);
    const auto cfg = g.dir.write("cfg.json", R"({"network": "grid.json", "scenarios": "scenarios.json",
        "fragility": "fragility.json", "trials": 3, "seed": 5, "gamma_c": [0.2, 0.4],
        "algorithms": ["jointpathmap", "modelcost"]})");
    auto from_config = cli({"pipeline", "--config", cfg.string()});
    ASSERT_EQ(from_config.code, kOk) << from_config.err;
    EXPECT_EQ(from_config.out, io::read_file(out));
    auto overridden = cli({"pipeline", "--config", cfg.string(), "--trials", "1"});
    EXPECT_EQ(lines(overridden.out).size(), 1u + 4u + 4u);
}

TEST(Cli, SimulateThenInfer) {
    GridFiles g;
    const auto probes = (g.dir.path() / "probes.json").string();
    const auto truth = (g.dir.path() / "truth.json").string();
    auto sim = cli({"simulate", "--network", g.network.string(), "--scenarios", g.scenarios.string(), "--fragility",
                    g.fragility.string(), "--gamma-c", "1", "--gamma-i", "1", "--seed", "8", "-o", probes, "--truth",
                    truth});
    ASSERT_EQ(sim.code, kOk) << sim.err;
    auto inf = cli({"infer", "--network", g.network.string(), "--scenarios", g.scenarios.string(), "--fragility",
                    g.fragility.string(), "--probes", probes});
    ASSERT_EQ(inf.code, kOk) << inf.err;
    auto truth_doc = nlohmann::json::parse(io::read_file(truth));
    auto sol_doc = nlohmann::json::parse(inf.out);
    EXPECT_EQ(sol_doc.at("failed_edges"), truth_doc.at("failed_edges"));
}

} // namespace
} // namespace netinfer::app
