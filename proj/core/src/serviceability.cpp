#include "netinfer/serviceability.hpp"

#include <algorithm>

namespace netinfer {

BoundedBfs::BoundedBfs(const InfraNetwork& net)
    : net_(&net), depth_(net.node_count(), kUnreached), parent_edge_(net.node_count(), kNoEdge),
      serviced_(net.node_count()) {
    queue_.reserve(net.node_count());
}

void BoundedBfs::run(const EdgeSet& removed, std::optional<EdgeId> also_removed) {
    const auto& net = *net_;
    const int bound = net.hop_bound();
    std::fill(depth_.begin(), depth_.end(), kUnreached);
    std::fill(parent_edge_.begin(), parent_edge_.end(), kNoEdge);
    serviced_.clear();
    queue_.clear();

    for (NodeId s : net.supply_nodes()) {
        depth_[s] = 0;
        queue_.push_back(s);
    }
    // queue_ doubles as the visit order; head walks it.
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const NodeId u = queue_[head];
        const int d = depth_[u];
        if (net.role(u) == NodeRole::Demand)
            serviced_.insert(u);
        if (d == bound)
            continue;
        for (const auto& [v, e] : net.incident(u)) {
            if (depth_[v] != kUnreached || removed.contains(e) || (also_removed && *also_removed == e))
                continue;
            depth_[v] = d + 1;
            parent_edge_[v] = e;
            queue_.push_back(v);
        }
    }
}

void BoundedBfs::tree_edges(std::vector<std::uint8_t>& flags) const {
    flags.assign(net_->edge_count(), 0);
    for (EdgeId e : parent_edge_)
        if (e != kNoEdge)
            flags[e] = 1;
}

NodeSet serviced_set(const InfraNetwork& net, const EdgeSet& failed) {
    BoundedBfs bfs(net);
    bfs.run(failed);
    return bfs.serviced();
}

bool is_feasible(const InfraNetwork& net, const EdgeSet& failed, const NodeSet& connectivity_probes) {
    return connectivity_probes.is_subset_of(serviced_set(net, failed));
}

} // namespace netinfer
