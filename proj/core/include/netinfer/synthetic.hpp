#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "netinfer/network.hpp"

namespace netinfer {

enum class SyntheticKind { Grid, Ring, Star, Random };

SyntheticKind parse_synthetic_kind(std::string_view name);

/// Desk-scale stand-in networks laid out on a 0.05 degree lattice near (35N, 90W).
///   grid   size x size lattice, corner nodes supply, the rest demand or transshipment; L = size - 1
///   ring   size-cycle, supply at 0 and size/2, the rest demand or transshipment; L = size/4 + 1
///   star   supply hub 0 with size - 1 demand leaves; L = 1
///   random size nodes, connected, about 2 * size edges; L = 4
/// `hop_bound` replaces the default L. Throws BadSize when size < 3.
InfraNetwork generate_synthetic(SyntheticKind kind, std::size_t size, std::uint64_t seed,
                                std::optional<int> hop_bound = std::nullopt);

/// Connected random graph with exactly `edges` edges over `nodes` nodes.
InfraNetwork generate_random_network(std::size_t nodes, std::size_t edges, int hop_bound, std::uint64_t seed);

} // namespace netinfer
