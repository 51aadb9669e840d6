#include <gtest/gtest.h>

#include <sstream>

#include <netinfer/inference.hpp>
#include <netinfer/io.hpp>
#include <netinfer/synthetic.hpp>

#include "fixtures.hpp"
#include "temp_dir.hpp"

namespace netinfer {
namespace {

Error error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e;
    }
    ADD_FAILURE() << "no error raised";
    return Error(Errc::Io, "");
}

constexpr const char* kLine = R"({"L": 2,
  "nodes": [{"id": 2, "role": "demand", "lat": 35.0, "lon": -90.0},
            {"id": 0, "role": "supply", "lat": 35.0, "lon": -90.1},
            {"id": 1, "role": "transshipment", "lat": 35.0, "lon": -90.05}],
  "edges": [{"id": 0, "u": 1, "v": 0}, {"id": 1, "u": 1, "v": 2}]})";

TEST(NetworkFile, ParsesAndSortsById) {
    auto net = io::parse_network(kLine);
    EXPECT_EQ(net.node_count(), 3u);
    EXPECT_EQ(net.role(0), NodeRole::Supply);
    EXPECT_EQ(net.role(2), NodeRole::Demand);
    EXPECT_EQ(net.edge_endpoints(0), (std::pair<NodeId, NodeId>{0, 1}));
    EXPECT_EQ(net.hop_bound(), 2);
}

TEST(NetworkFile, RoundTrip) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto net = generate_random_network(20, 33, 4, seed);
        const auto text = io::network_to_json(net);
        EXPECT_EQ(io::network_to_json(io::parse_network(text)), text);
    }
}

TEST(NetworkFile, Errors) {
    auto gap = error_of([] {
        io::parse_network(R"({"L": 1, "nodes": [{"id": 0, "role": "supply", "lat": 0, "lon": 0},
                                                {"id": 2, "role": "demand", "lat": 0, "lon": 0}],
                              "edges": []})",
                          "gap.json");
    });
    EXPECT_EQ(gap.code(), Errc::Parse);
    EXPECT_NE(std::string(gap.what()).find("gap.json"), std::string::npos);

    auto syntax = error_of([] { io::parse_network("{\n\"L\": 2,\n\"nodes\": [,]}", "broken.json"); });
    EXPECT_EQ(syntax.code(), Errc::Parse);
    EXPECT_NE(std::string(syntax.what()).find("line 3"), std::string::npos) << syntax.what();

    auto dup = error_of([] {
        io::parse_network(R"({"L": 1, "nodes": [{"id": 0, "role": "supply", "lat": 0, "lon": 0},
                                                {"id": 1, "role": "demand", "lat": 0, "lon": 0}],
                              "edges": [{"id": 0, "u": 0, "v": 1}, {"id": 1, "u": 1, "v": 0}]})",
                          "dup.json");
    });
    EXPECT_EQ(dup.code(), Errc::DuplicateEdge);
    EXPECT_NE(std::string(dup.what()).find("dup.json"), std::string::npos);

    EXPECT_EQ(error_of([] { io::parse_network(R"({"L": 1, "nodes": [{"id": 0, "role": "plant", "lat": 0, "lon": 0}], "edges": []})"); })
                  .code(),
              Errc::Parse);
    EXPECT_EQ(error_of([] { io::parse_network(R"({"nodes": [], "edges": []})"); }).code(), Errc::Parse);
    EXPECT_EQ(error_of([] { io::load_network("/nonexistent/net.json"); }).code(), Errc::Io);
}

TEST(ScenarioFile, PriorsGivenOrDefaulted) {
    bool defaulted = true;
    auto given = io::parse_scenarios(
        R"({"scenarios": [{"epicenter": [35, -90], "magnitude": 6.0, "prior": 0.25},
                          {"epicenter": [35.1, -90.1], "magnitude": 7.0, "prior": 0.75}]})",
        "s.json", &defaulted);
    EXPECT_FALSE(defaulted);
    EXPECT_EQ(given[1].prior, 0.75);
    EXPECT_EQ(given[1].magnitude, 7.0);
    EXPECT_EQ(given[1].lat, 35.1);
    auto uniform = io::parse_scenarios(
        R"({"scenarios": [{"epicenter": [35, -90], "magnitude": 6.0}, {"epicenter": [35, -90], "magnitude": 6.5},
                          {"epicenter": [35, -90], "magnitude": 5.5}, {"epicenter": [35, -90], "magnitude": 6.0}]})",
        "s.json", &defaulted);
    EXPECT_TRUE(defaulted);
    for (const auto& s : uniform.scenarios())
        EXPECT_EQ(s.prior, 0.25);
    EXPECT_EQ(io::parse_scenarios(io::scenarios_to_json(given)).scenarios()[0].prior, 0.25);
}

TEST(ScenarioFile, Errors) {
    EXPECT_EQ(error_of([] {
                  io::parse_scenarios(R"({"scenarios": [{"epicenter": [35, -90], "magnitude": 6.0, "prior": 1.0},
                                                        {"epicenter": [35, -90], "magnitude": 6.0}]})");
              }).code(),
              Errc::Parse);
    EXPECT_EQ(error_of([] {
                  io::parse_scenarios(R"({"scenarios": [{"epicenter": [35, -90], "magnitude": 6.0, "prior": 0.5}]})");
              }).code(),
              Errc::InvalidScenarios);
    EXPECT_EQ(error_of([] { io::parse_scenarios(R"({"scenarios": [{"epicenter": [35], "magnitude": 6.0}]})"); }).code(),
              Errc::Parse);
}

TEST(FragilityFile, RolesNodesAndInvulnerable) {
    auto f = io::parse_fragility(R"({"demand": {"median_pga": 0.47, "beta": 0.4},
                                    "supply": "invulnerable",
                                    "2": {"median_pga": 0.3, "beta": 0.5},
                                    "0": "invulnerable"})");
    ASSERT_TRUE(f.by_role.at(NodeRole::Demand).has_value());
    EXPECT_EQ(f.by_role.at(NodeRole::Demand)->median_pga, 0.47);
    EXPECT_FALSE(f.by_role.at(NodeRole::Supply).has_value());
    EXPECT_EQ(f.by_node.at(2)->beta, 0.5);
    EXPECT_FALSE(f.by_node.at(0).has_value());
    auto again = io::parse_fragility(io::fragility_to_json(f));
    EXPECT_EQ(io::fragility_to_json(again), io::fragility_to_json(f));
    EXPECT_EQ(error_of([] { io::parse_fragility(R"({"demand": "sturdy"})"); }).code(), Errc::Parse);
    EXPECT_EQ(error_of([] { io::parse_fragility(R"({"towers": "invulnerable"})"); }).code(), Errc::Parse);
    EXPECT_EQ(error_of([] { io::parse_fragility(R"({"demand": {"median_pga": -1, "beta": 0.4}})"); }).code(),
              Errc::InvalidParameter);
}

TEST(ProbeFile, ParseValidateRoundTrip) {
    auto net = testing::redundant_network();
    auto p = io::parse_probes(R"({"qc": [5, 2], "qi": [8], "gamma_c": 0.4, "gamma_i": 0.3})", net);
    EXPECT_EQ(p.connectivity, NodeSet(9, {2, 5}));
    EXPECT_EQ(p.point, EdgeSet(10, {8}));
    auto again = io::parse_probes(io::probes_to_json(p), net);
    EXPECT_EQ(again.connectivity, p.connectivity);
    EXPECT_EQ(again.gamma_c, 0.4);
    EXPECT_EQ(error_of([&] { io::parse_probes(R"({"qc": [1], "qi": [], "gamma_c": 0.4, "gamma_i": 0.3})", net); }).code(),
              Errc::Parse);
    EXPECT_EQ(error_of([&] { io::parse_probes(R"({"qc": [], "qi": [10], "gamma_c": 0.4, "gamma_i": 0.3})", net); }).code(),
              Errc::BadIndex);
    EXPECT_EQ(error_of([&] { io::parse_probes(R"({"qc": [], "qi": [], "gamma_c": 1.4, "gamma_i": 0.3})", net); }).code(),
              Errc::OutOfRangeProbability);
}

TEST(TableCsv, Format) {
    auto table = testing::make_table({0.5, 0.5}, {{0.0, 0.75}, {0.1, 1.0}});
    std::ostringstream out;
    io::write_table_csv(out, table);
    EXPECT_EQ(out.str(), "scenario_id,edge_id,prob\n0,0,0\n0,1,0.75\n1,0,0.1\n1,1,1\n");
}

TEST(SolutionJson, InfinityAsNull) {
    auto net = testing::star_network();
    auto table = testing::uniform_table(net, 0.3);
    auto sol = joint_path_map(net, table, {NodeSet(4, {1}), EdgeSet(3, {2}), 0.5, 0.5});
    const auto text = io::solution_to_json(net, sol);
    EXPECT_NE(text.find("\"failed_edges\""), std::string::npos);
    sol.cost = MdlCost::infeasible();
    EXPECT_NE(io::solution_to_json(net, sol).find("null"), std::string::npos);
}

TEST(Files, ReadWrite) {
    testing::TempDir dir;
    auto p = dir.write("x.txt", "abc\n");
    EXPECT_EQ(io::read_file(p), "abc\n");
    EXPECT_EQ(error_of([&] { io::write_file(dir.path() / "missing" / "x.txt", "a"); }).code(), Errc::Io);
}

} // namespace
} // namespace netinfer
