#pragma once

#include <functional>
#include <utility>

#include "pyra/design.hpp"

namespace pyra {

/// Exact record of one center-block decomposition. Component designs are
/// stored in local coordinates 0..2^(r-1)-2; the carriers embed a local
/// point into the ambient set through the ascending order of the carrier
/// points (design_o lives on the complement of `center`, design_z on `z`).
struct DecompositionWitness {
    int v = 0;            // ambient point count 2^r - 1
    Block center;         // the center block O
    Block z;              // Z, a subset of O missing exactly one point
    int p_prime = -1;     // the point of O outside Z
    Design design_o;      // traces of the other blocks outside O
    Design design_z;      // for each design_o block, the O-trace that avoids p_prime
    std::vector<std::pair<int, int>> delta;  // design_o block index -> design_z block index
};

/// Rebuilds the full design from a decomposition: the center block itself
/// plus, for every design_o block X, the two blocks X + delta(X) and
/// X + (O minus delta(X)). Any bijection delta yields a valid symmetric
/// design with `center` as a center block.
Design sum_construction(const Block& center, const Design& design_o, const Block& z,
                        const Design& design_z, const std::vector<std::pair<int, int>>& delta);

Design sum_construction(const DecompositionWitness& w);

/// Splits a design over one of its center blocks. `z` selects which point
/// of the center block is excluded from the Z-side traces. The witness
/// reassembles to the input exactly.
DecompositionWitness decompose(const Design& d, int center_index, const Block& z);

/// Rewrites a witness for a different choice z_prime without touching the
/// full design: a trace stays as it is when it avoids the newly excluded
/// point and is complemented inside O otherwise.
DecompositionWitness transfer_delta(const DecompositionWitness& w, const Block& z_prime);

struct ZClassification {
    bool all_pg = false;  // common verdict across every choice of Z
    struct Evidence {
        int excluded_point;
        bool pg;
    };
    std::vector<Evidence> evidence;  // one entry per point of the center block
};

/// Evaluates the PG criterion of the Z-side component for every possible
/// Z. The verdict is provably independent of Z; a disagreement between
/// two choices is reported as an invariant violation.
ZClassification classify_z_components(const Design& d, int center_index);

using DeltaMap = std::vector<std::pair<int, int>>;

struct DeltaSearchOptions {
    std::size_t exhaustive_limit = 40320;  // largest factorial swept exhaustively (8!)
    std::uint64_t seed = 1;                // sampling seed beyond the exhaustive range
    std::size_t samples = 0;               // 0 = exhaustive only (error beyond the limit)
};

/// Sweeps bijections delta between the blocks of design_o and design_z,
/// builds each sum, and keeps the bijections whose design satisfies the
/// predicate. Exhaustive in lexicographic rank order up to the configured
/// ceiling; beyond it, seeded sampling must be requested explicitly.
std::vector<DeltaMap> delta_search(const Design& design_o, const Design& design_z,
                                   const Block& center, const Block& z,
                                   const std::function<bool(const Design&)>& predicate,
                                   const DeltaSearchOptions& options = {});

}  // namespace pyra
