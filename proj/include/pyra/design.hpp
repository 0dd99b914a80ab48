#pragma once

#include <optional>
#include <vector>

#include "pyra/block.hpp"

namespace pyra {

/// Block system on points {0..v-1}. The block list is kept in canonical
/// order (ascending bit-vector value) and may not contain duplicates;
/// all design equality is equality of the canonical lists.
class Design {
  public:
    Design(int v, std::vector<Block> blocks);

    int v() const { return v_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const Block& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }

    bool has_block(const Block& b) const { return index_of(b).has_value(); }
    std::optional<int> index_of(const Block& b) const;

    /// Mask over block indices of the blocks containing p.
    /// Available because the block count is bounded by 64.
    std::uint64_t through_mask(int p) const { return through_.at(static_cast<std::size_t>(p)); }

    friend bool operator==(const Design& a, const Design& b) { return a.v_ == b.v_ && a.blocks_ == b.blocks_; }

  private:
    int v_;
    std::vector<Block> blocks_;
    std::vector<std::uint64_t> through_;
};

struct ValidationReport {
    int v = 0;
    int block_size = 0;  // k, 0 if sizes are not uniform
    int lambda = 0;      // pairwise intersection size, 0 if not constant
    std::vector<std::string> errors;

    bool ok() const { return errors.empty(); }
};

/// Checks that the design is symmetric: v blocks, uniform block size k,
/// every pair of distinct blocks meeting in the same number of points,
/// and every point lying in exactly k blocks. All violations found (up
/// to an internal cap) are reported with witnesses.
ValidationReport validate_symmetric_design(const Design& d);

/// Parameters (v, k, lambda) of a design that passed validation.
struct DesignParams {
    int v, k, lambda;
};
DesignParams design_params(const Design& d);

/// Interchanges the roles of points and blocks: point i of the dual is
/// block i of the input, and the dual block for input point p collects
/// the indices of the blocks containing p.
Design dual_design(const Design& d);

/// Applies a point permutation to every block and re-canonicalizes.
Design apply(const Permutation& g, const Design& d);

/// True when g maps the block list of the design onto itself.
bool is_automorphism(const Design& d, const Permutation& g);

/// Searches for a bijection of points carrying the blocks of a onto the
/// blocks of b. Returns the witness found first in deterministic search
/// order, or nothing when no such bijection exists.
std::optional<Permutation> is_isomorphic(const Design& a, const Design& b);

}  // namespace pyra
