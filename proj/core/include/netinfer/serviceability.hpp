#pragma once

#include <optional>
#include <vector>

#include "netinfer/id_set.hpp"
#include "netinfer/network.hpp"

namespace netinfer {

/// Multi-source BFS from all supply nodes, truncated at the network's hop bound,
/// over the graph with a set of edges removed. Buffers are reused across runs, so
/// one instance per thread.
class BoundedBfs {
public:
    static constexpr int kUnreached = -1;
    static constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

    explicit BoundedBfs(const InfraNetwork& net);

    /// Runs with `removed` deleted, plus `also_removed` when given.
    void run(const EdgeSet& removed, std::optional<EdgeId> also_removed = std::nullopt);

    /// Demand nodes reached by the last run.
    const NodeSet& serviced() const noexcept { return serviced_; }

    /// Hop distance to the nearest supply node from the last run, or kUnreached.
    const std::vector<int>& depth() const noexcept { return depth_; }
    /// Edge through which each node was first reached in the last run, or kNoEdge.
    const std::vector<EdgeId>& parent_edge() const noexcept { return parent_edge_; }
    /// Marks the edges of the last run's BFS forest. Removing any other edge leaves
    /// every depth, and so the serviced set, unchanged.
    void tree_edges(std::vector<std::uint8_t>& flags) const;

private:
    const InfraNetwork* net_;
    std::vector<int> depth_;
    std::vector<EdgeId> parent_edge_;
    std::vector<NodeId> queue_;
    NodeSet serviced_;
};

/// Demand nodes with a path of at most L edges to some supply node once `failed` is removed.
NodeSet serviced_set(const InfraNetwork& net, const EdgeSet& failed);

/// True iff every connectivity probe is still serviced under `failed`.
bool is_feasible(const InfraNetwork& net, const EdgeSet& failed, const NodeSet& connectivity_probes);

} // namespace netinfer
