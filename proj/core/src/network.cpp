#include "netinfer/network.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

namespace netinfer {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::NoSupplyNode: return "NoSupplyNode";
    case Errc::NoDemandNode: return "NoDemandNode";
    case Errc::BadIndex: return "BadIndex";
    case Errc::BadHopBound: return "BadHopBound";
    case Errc::NegativeDistance: return "NegativeDistance";
    case Errc::OutOfRangeProbability: return "OutOfRangeProbability";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::MissingFragility: return "MissingFragility";
    case Errc::InvalidScenarios: return "InvalidScenarios";
    case Errc::InfeasibleProbes: return "InfeasibleProbes";
    case Errc::TooLarge: return "TooLarge";
    case Errc::EmptyTrialList: return "EmptyTrialList";
    case Errc::BadSize: return "BadSize";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
    case Errc::Config: return "Config";
    }
    return "Unknown";
}

std::string_view to_string(NodeRole role) noexcept {
    switch (role) {
    case NodeRole::Supply: return "supply";
    case NodeRole::Demand: return "demand";
    case NodeRole::Transshipment: return "transshipment";
    }
    return "unknown";
}

NodeRole parse_node_role(std::string_view name) {
    if (name == "supply")
        return NodeRole::Supply;
    if (name == "demand")
        return NodeRole::Demand;
    if (name == "transshipment")
        return NodeRole::Transshipment;
    throw Error(Errc::Parse, "unknown node role '" + std::string(name) + "'");
}

InfraNetwork InfraNetwork::build(std::vector<NodeSpec> nodes,
                                 const std::vector<std::pair<NodeId, NodeId>>& edges,
                                 int hop_bound) {
    if (hop_bound < 1)
        throw Error(Errc::BadHopBound, "hop bound L must be >= 1, got " + std::to_string(hop_bound));

    InfraNetwork net;
    net.hop_bound_ = hop_bound;
    net.nodes_ = std::move(nodes);
    const auto n = net.nodes_.size();

    for (NodeId i = 0; i < n; ++i) {
        switch (net.nodes_[i].role) {
        case NodeRole::Supply: net.supply_.push_back(i); break;
        case NodeRole::Demand: net.demand_.push_back(i); break;
        case NodeRole::Transshipment: net.transshipment_.push_back(i); break;
        }
    }
    if (net.supply_.empty())
        throw Error(Errc::NoSupplyNode, "network has no supply node");
    if (net.demand_.empty())
        throw Error(Errc::NoDemandNode, "network has no demand node");

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    net.edges_.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [a, b] = edges[e];
        if (a >= n || b >= n)
            throw Error(Errc::BadIndex, "edge " + std::to_string(e) + " references node "
                                            + std::to_string(a >= n ? a : b) + " but |V| = "
                                            + std::to_string(n));
        if (a == b)
            throw Error(Errc::SelfLoop, "edge " + std::to_string(e) + " is a self-loop on node "
                                            + std::to_string(a));
        if (a > b)
            std::swap(a, b);
        const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        if (!seen.insert(key).second)
            throw Error(Errc::DuplicateEdge, "edge " + std::to_string(e) + " duplicates (" + std::to_string(a)
                                                 + ", " + std::to_string(b) + ")");
        net.edges_.push_back({a, b});
    }

    // CSR adjacency, each node's incidences in edge-id order.
    std::vector<std::size_t> degree(n, 0);
    for (const auto& edge : net.edges_) {
        ++degree[edge.u];
        ++degree[edge.v];
    }
    net.adjacency_offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        net.adjacency_offsets_[i + 1] = net.adjacency_offsets_[i] + degree[i];
    net.adjacency_.resize(net.adjacency_offsets_[n]);
    std::vector<std::size_t> cursor(net.adjacency_offsets_.begin(), net.adjacency_offsets_.end() - 1);
    for (EdgeId e = 0; e < net.edges_.size(); ++e) {
        const auto& edge = net.edges_[e];
        net.adjacency_[cursor[edge.u]++] = {edge.v, e};
        net.adjacency_[cursor[edge.v]++] = {edge.u, e};
    }
    return net;
}

const NodeSpec& InfraNetwork::node(NodeId n) const {
    if (n >= nodes_.size())
        throw Error(Errc::BadIndex, "node " + std::to_string(n) + " out of range");
    return nodes_[n];
}

std::pair<NodeId, NodeId> InfraNetwork::edge_endpoints(EdgeId e) const {
    if (e >= edges_.size())
        throw Error(Errc::BadIndex, "edge " + std::to_string(e) + " out of range");
    return {edges_[e].u, edges_[e].v};
}

std::span<const Incidence> InfraNetwork::incident(NodeId n) const {
    if (n >= nodes_.size())
        throw Error(Errc::BadIndex, "node " + std::to_string(n) + " out of range");
    return std::span<const Incidence>(adjacency_).subspan(adjacency_offsets_[n],
                                                          adjacency_offsets_[n + 1] - adjacency_offsets_[n]);
}

double haversine_km(double lat1, double lon1, double lat2, double lon2) noexcept {
    constexpr double deg = std::numbers::pi / 180.0;
    const double dlat = (lat2 - lat1) * deg;
    const double dlon = (lon2 - lon1) * deg;
    const double a = std::sin(dlat / 2) * std::sin(dlat / 2)
                     + std::cos(lat1 * deg) * std::cos(lat2 * deg) * std::sin(dlon / 2) * std::sin(dlon / 2);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

} // namespace netinfer
