#pragma once

#include <cstdint>
#include <vector>

#include "pyra/block.hpp"
#include "pyra/design.hpp"

namespace pyra {

struct MapSearchOptions {
    std::size_t limit = 0;              // stop after this many maps; 0 = enumerate all
    std::uint64_t node_budget = 0;      // 0 = unlimited
    double time_budget_seconds = 0.0;   // 0 = unlimited
};

struct MapSearchResult {
    std::vector<Permutation> maps;  // sorted by image array
    bool complete = false;          // search space exhausted (or limit reached)
    std::uint64_t nodes = 0;
};

/// Enumerates point bijections from `from` to `to` that carry every block
/// of `from` onto a block of `to`. `point_candidates[p]` is a bit mask of
/// the images point p may take; the search refines these masks with
/// block-trace propagation and backtracks over the remaining choices in
/// ascending point/image order, so results are deterministic.
MapSearchResult search_block_maps(const Design& from, const Design& to,
                                  const std::vector<std::uint64_t>& point_candidates,
                                  const MapSearchOptions& options = {});

}  // namespace pyra
