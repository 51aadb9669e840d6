#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "netinfer/id_set.hpp"

namespace netinfer {

enum class NodeRole { Supply, Demand, Transshipment };

std::string_view to_string(NodeRole role) noexcept;
NodeRole parse_node_role(std::string_view name);

struct NodeSpec {
    NodeRole role = NodeRole::Transshipment;
    double lat = 0.0; // degrees
    double lon = 0.0; // degrees
};

/// Undirected edge, endpoints stored in ascending id order.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
};

struct Incidence {
    NodeId neighbor;
    EdgeId edge;
};

/// Immutable infrastructure graph with typed node roles and a service hop bound.
///
/// Edge ids follow input order. Construction validates the graph: no self-loops,
/// no parallel edges, at least one supply and one demand node, hop bound >= 1.
class InfraNetwork {
public:
    static InfraNetwork build(std::vector<NodeSpec> nodes,
                              const std::vector<std::pair<NodeId, NodeId>>& edges,
                              int hop_bound);

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    int hop_bound() const noexcept { return hop_bound_; }

    const NodeSpec& node(NodeId n) const;
    NodeRole role(NodeId n) const { return node(n).role; }
    std::span<const NodeSpec> nodes() const noexcept { return nodes_; }

    /// Endpoints of `e` in ascending id order. Throws BadIndex.
    std::pair<NodeId, NodeId> edge_endpoints(EdgeId e) const;
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Incident (neighbor, edge) pairs of `n`, in edge-id order.
    std::span<const Incidence> incident(NodeId n) const;

    std::span<const NodeId> supply_nodes() const noexcept { return supply_; }
    std::span<const NodeId> demand_nodes() const noexcept { return demand_; }
    std::span<const NodeId> transshipment_nodes() const noexcept { return transshipment_; }

    EdgeSet empty_edge_set() const { return EdgeSet(edges_.size()); }
    NodeSet empty_node_set() const { return NodeSet(nodes_.size()); }

private:
    InfraNetwork() = default;

    std::vector<NodeSpec> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> adjacency_offsets_;
    std::vector<Incidence> adjacency_;
    std::vector<NodeId> supply_;
    std::vector<NodeId> demand_;
    std::vector<NodeId> transshipment_;
    int hop_bound_ = 1;
};

inline std::pair<NodeId, NodeId> edge_endpoints(const InfraNetwork& net, EdgeId e) {
    return net.edge_endpoints(e);
}

constexpr double kEarthRadiusKm = 6371.0;

/// Great-circle distance in km between two WGS84 points given in degrees.
double haversine_km(double lat1, double lon1, double lat2, double lon2) noexcept;

} // namespace netinfer
