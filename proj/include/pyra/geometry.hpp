#pragma once

#include <array>
#include <span>

#include "pyra/design.hpp"

namespace pyra {

/// Ambient parameters for the halved-subset point geometry: points are the
/// 2m-element subsets of an n-element set. Lines exist only when 3m <= n.
struct GeometryParams {
    int n;
    int m;

    GeometryParams(int n_, int m_) : n(n_), m(m_) {
        if (n < 3) throw std::invalid_argument("geometry needs n >= 3");
        if (m < 1) throw std::invalid_argument("geometry needs m >= 1");
        if (2 * m > n) throw std::invalid_argument("2m-subsets need 2m <= n");
    }
};

/// Design whose points stand for the nonzero vectors of a rank-dimensional
/// binary space (point i is the vector with value i+1) and whose blocks are
/// the complements of the hyperplanes: for each nonzero functional a the
/// block collects the points with odd popcount(a AND (i+1)).
Design pg_hyperplane_complement_design(int rank);

/// Two distinct 2m-sets are collinear exactly when they share m points.
bool collinear(const Block& x, const Block& y, int m);

/// The unique line through two collinear points: {x, y, x ^ y}.
std::array<Block, 3> line_through(const Block& x, const Block& y, int m);

/// True when every pair from the set is collinear and closed under
/// symmetric difference (so the set spans a singular subspace).
bool is_singular_subspace(std::span<const Block> blocks, int m);

struct CliqueSearchOptions {
    std::size_t vertex_budget = 10'000;  // refuse larger vertex sets
};

/// All cliques of exactly target_size in the collinearity graph on the
/// 2m-subsets of an n-set, each returned as a canonical block list over
/// the n ambient points. Enumeration is an ordered depth-first extension
/// over bitset adjacency rows, so each clique appears exactly once and
/// the output order is deterministic.
std::vector<Design> enumerate_cliques(const GeometryParams& params, int target_size,
                                      const CliqueSearchOptions& options = {});

}  // namespace pyra
