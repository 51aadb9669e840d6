#include "netinfer/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netinfer/random.hpp"

namespace netinfer {

namespace {

constexpr double kBaseLat = 35.0;
constexpr double kBaseLon = -90.0;
constexpr double kSpacing = 0.05;

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

NodeRole interior_role(RandomSource& rng) {
    return rng.bernoulli(0.75) ? NodeRole::Demand : NodeRole::Transshipment;
}

// Guarantees at least one demand node among the candidates.
void ensure_demand(std::vector<NodeSpec>& nodes) {
    for (const auto& n : nodes)
        if (n.role == NodeRole::Demand)
            return;
    for (auto& n : nodes)
        if (n.role == NodeRole::Transshipment) {
            n.role = NodeRole::Demand;
            return;
        }
}

InfraNetwork grid(std::size_t k, RandomSource& rng) {
    std::vector<NodeSpec> nodes;
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            const bool corner = (r == 0 || r == k - 1) && (c == 0 || c == k - 1);
            nodes.push_back({corner ? NodeRole::Supply : interior_role(rng), kBaseLat + kSpacing * r,
                             kBaseLon + kSpacing * c});
        }
    ensure_demand(nodes);
    EdgeList edges;
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            const auto id = static_cast<NodeId>(r * k + c);
            if (c + 1 < k)
                edges.emplace_back(id, id + 1);
            if (r + 1 < k)
                edges.emplace_back(id, static_cast<NodeId>(id + k));
        }
    return InfraNetwork::build(std::move(nodes), edges, static_cast<int>(k - 1));
}

InfraNetwork ring(std::size_t n, RandomSource& rng) {
    std::vector<NodeSpec> nodes;
    const double radius = kSpacing * static_cast<double>(n) / (2.0 * std::numbers::pi);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        const bool supply = i == 0 || (n >= 4 && i == n / 2);
        nodes.push_back({supply ? NodeRole::Supply : interior_role(rng), kBaseLat + radius * std::sin(angle),
                         kBaseLon + radius * std::cos(angle)});
    }
    ensure_demand(nodes);
    EdgeList edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
    return InfraNetwork::build(std::move(nodes), edges, static_cast<int>(n / 4 + 1));
}

InfraNetwork star(std::size_t n) {
    std::vector<NodeSpec> nodes{{NodeRole::Supply, kBaseLat, kBaseLon}};
    EdgeList edges;
    for (std::size_t i = 1; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1);
        nodes.push_back({NodeRole::Demand, kBaseLat + kSpacing * std::sin(angle), kBaseLon + kSpacing * std::cos(angle)});
        edges.emplace_back(0, static_cast<NodeId>(i));
    }
    return InfraNetwork::build(std::move(nodes), edges, 1);
}

} // namespace

SyntheticKind parse_synthetic_kind(std::string_view name) {
    if (name == "grid")
        return SyntheticKind::Grid;
    if (name == "ring")
        return SyntheticKind::Ring;
    if (name == "star")
        return SyntheticKind::Star;
    if (name == "random")
        return SyntheticKind::Random;
    throw Error(Errc::Config, "unknown synthetic network kind '" + std::string(name) + "'");
}

InfraNetwork generate_random_network(std::size_t node_count, std::size_t edge_count, int hop_bound,
                                     std::uint64_t seed) {
    if (node_count < 3)
        throw Error(Errc::BadSize, "random network needs >= 3 nodes, got " + std::to_string(node_count));
    const std::size_t max_edges = node_count * (node_count - 1) / 2;
    if (edge_count < node_count - 1 || edge_count > max_edges)
        throw Error(Errc::BadSize, "cannot build a connected simple graph with " + std::to_string(node_count)
                                       + " nodes and " + std::to_string(edge_count) + " edges");
    SeededRandom rng(seed);
    const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(node_count))));
    std::vector<NodeSpec> nodes;
    const std::size_t supplies = std::max<std::size_t>(1, node_count / 10);
    for (std::size_t i = 0; i < node_count; ++i) {
        const NodeRole role = i < supplies ? NodeRole::Supply
                                           : (rng.bernoulli(0.7) ? NodeRole::Demand : NodeRole::Transshipment);
        nodes.push_back({role, kBaseLat + kSpacing * static_cast<double>(i / side) + 0.01 * rng.uniform01(),
                         kBaseLon + kSpacing * static_cast<double>(i % side) + 0.01 * rng.uniform01()});
    }
    ensure_demand(nodes);

    std::set<std::pair<NodeId, NodeId>> seen;
    EdgeList edges;
    auto add = [&](NodeId a, NodeId b) {
        if (a == b)
            return false;
        if (a > b)
            std::swap(a, b);
        if (!seen.emplace(a, b).second)
            return false;
        edges.emplace_back(a, b);
        return true;
    };
    // Random recursive tree keeps the graph connected.
    for (NodeId v = 1; v < node_count; ++v)
        add(static_cast<NodeId>(rng.next_u64() % v), v);
    while (edges.size() < edge_count)
        add(static_cast<NodeId>(rng.next_u64() % node_count), static_cast<NodeId>(rng.next_u64() % node_count));
    return InfraNetwork::build(std::move(nodes), edges, hop_bound);
}

InfraNetwork generate_synthetic(SyntheticKind kind, std::size_t size, std::uint64_t seed,
                                std::optional<int> hop_bound) {
    if (size < 3)
        throw Error(Errc::BadSize, "synthetic network size must be >= 3, got " + std::to_string(size));
    SeededRandom rng(seed);
    InfraNetwork net = [&] {
        switch (kind) {
        case SyntheticKind::Grid: return grid(size, rng);
        case SyntheticKind::Ring: return ring(size, rng);
        case SyntheticKind::Star: return star(size);
        case SyntheticKind::Random:
            return generate_random_network(size, std::min(2 * size, size * (size - 1) / 2), 4, seed);
        }
        throw Error(Errc::BadSize, "unknown synthetic kind");
    }();
    if (!hop_bound)
        return net;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& e : net.edges())
        edges.emplace_back(e.u, e.v);
    return InfraNetwork::build({net.nodes().begin(), net.nodes().end()}, edges, *hop_bound);
}

} // namespace netinfer
