#pragma once

#include <optional>

#include "pyra/design.hpp"

namespace pyra {

/// Indices of the blocks containing p, ascending.
std::vector<int> blocks_through(const Design& d, int p);

/// Indices of the blocks avoiding p, ascending.
std::vector<int> blocks_avoiding(const Design& d, int p);

/// Triple of points no block contains entirely.
struct DesignLine {
    int p, q, t;
};

/// The unique third point t completing p,q to a triple covered by no
/// block. t is located through the identity "blocks through t = blocks
/// through p XOR blocks through q"; absence of such a t means p and q
/// are not collinear in the design sense.
std::optional<DesignLine> design_line(const Design& d, int p, int q);

/// True when p is collinear with every other point.
bool is_center_point(const Design& d, int p);

/// True when every pair of distinct points is collinear. Requires the
/// design to have parameters (2^r-1, 2^(r-1), 2^(r-2)) for some r >= 2;
/// anything else is a domain error.
bool satisfies_pg_criterion(const Design& d);

/// Indices i such that block i XOR any other block is again a block.
std::vector<int> center_blocks(const Design& d);

/// True when block i is a center block.
bool is_center_block(const Design& d, int i);

}  // namespace pyra
