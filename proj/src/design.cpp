#include "pyra/design.hpp"

#include <algorithm>
#include <map>

#include "pyra/mapsearch.hpp"

namespace pyra {

Design::Design(int v, std::vector<Block> blocks) : v_(v), blocks_(std::move(blocks)) {
    if (v < 1 || v > Block::max_width) throw std::invalid_argument("point count outside [1,63]");
    for (const auto& b : blocks_) {
        if (b.v() != v_) throw std::invalid_argument("block ground set differs from design");
        if (b.empty()) throw std::invalid_argument("empty block");
    }
    std::sort(blocks_.begin(), blocks_.end());
    auto dup = std::adjacent_find(blocks_.begin(), blocks_.end());
    if (dup != blocks_.end())
        throw std::invalid_argument("duplicate block at canonical index " +
                                    std::to_string(dup - blocks_.begin()));
    if (blocks_.size() > 64) throw std::invalid_argument("block count exceeds 64");
    through_.assign(static_cast<std::size_t>(v_), 0);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (std::uint64_t m = blocks_[i].mask(); m; m &= m - 1)
            through_[static_cast<std::size_t>(std::countr_zero(m))] |= std::uint64_t{1} << i;
}

std::optional<int> Design::index_of(const Block& b) const {
    auto it = std::lower_bound(blocks_.begin(), blocks_.end(), b);
    if (it != blocks_.end() && *it == b) return static_cast<int>(it - blocks_.begin());
    return std::nullopt;
}

ValidationReport validate_symmetric_design(const Design& d) {
    constexpr std::size_t error_cap = 16;
    ValidationReport rep;
    rep.v = d.v();
    const auto& blocks = d.blocks();

    if (d.block_count() != d.v())
        rep.errors.push_back("block count " + std::to_string(d.block_count()) + " differs from point count " +
                             std::to_string(d.v()));
    if (blocks.empty()) return rep;

    int k = blocks.front().size();
    for (std::size_t i = 1; i < blocks.size() && rep.errors.size() < error_cap; ++i)
        if (blocks[i].size() != k)
            rep.errors.push_back("block " + std::to_string(i) + " has size " + std::to_string(blocks[i].size()) +
                                 ", block 0 has size " + std::to_string(k));
    if (!rep.errors.empty()) return rep;
    rep.block_size = k;

    if (blocks.size() >= 2) {
        int lambda = intersect_count(blocks[0], blocks[1]);
        for (std::size_t i = 0; i < blocks.size() && rep.errors.size() < error_cap; ++i)
            for (std::size_t j = i + 1; j < blocks.size() && rep.errors.size() < error_cap; ++j) {
                int c = intersect_count(blocks[i], blocks[j]);
                if (c != lambda)
                    rep.errors.push_back("blocks " + std::to_string(i) + " and " + std::to_string(j) +
                                         " intersect in " + std::to_string(c) + " points, blocks 0 and 1 in " +
                                         std::to_string(lambda));
            }
        if (!rep.errors.empty()) return rep;
        rep.lambda = lambda;
    }

    for (int p = 0; p < d.v(); ++p) {
        int deg = std::popcount(d.through_mask(p));
        if (deg != k) {
            rep.errors.push_back("point " + std::to_string(p) + " lies in " + std::to_string(deg) +
                                 " blocks, expected " + std::to_string(k));
            break;
        }
    }
    return rep;
}

DesignParams design_params(const Design& d) {
    auto rep = validate_symmetric_design(d);
    if (!rep.ok()) throw std::invalid_argument("not a symmetric design: " + rep.errors.front());
    return {rep.v, rep.block_size, rep.lambda};
}

Design dual_design(const Design& d) {
    auto rep = validate_symmetric_design(d);
    if (!rep.ok()) throw std::invalid_argument("dual of invalid design: " + rep.errors.front());
    std::vector<Block> duals;
    duals.reserve(static_cast<std::size_t>(d.v()));
    for (int p = 0; p < d.v(); ++p) duals.push_back(Block(d.v(), d.through_mask(p)));
    return Design(d.v(), std::move(duals));
}

Design apply(const Permutation& g, const Design& d) {
    if (g.v() != d.v()) throw std::invalid_argument("permutation degree differs from design");
    std::vector<Block> mapped;
    mapped.reserve(d.blocks().size());
    for (const auto& b : d.blocks()) mapped.push_back(g.apply(b));
    return Design(d.v(), std::move(mapped));
}

bool is_automorphism(const Design& d, const Permutation& g) {
    if (g.v() != d.v()) return false;
    for (const auto& b : d.blocks())
        if (!d.has_block(g.apply(b))) return false;
    return true;
}

namespace {

// Per-point profile invariant under isomorphism: the histogram of triple
// covering counts |{blocks containing p, q, r}| over all pairs {q, r}.
// First-order profiles are constant across a symmetric design, so triples
// are the cheapest level that separates points at all.
std::vector<std::map<int, int>> triple_profiles(const Design& d) {
    int v = d.v();
    std::vector<std::map<int, int>> prof(static_cast<std::size_t>(v));
    for (int p = 0; p < v; ++p)
        for (int q = 0; q < v; ++q) {
            if (q == p) continue;
            std::uint64_t pq = d.through_mask(p) & d.through_mask(q);
            for (int r = q + 1; r < v; ++r) {
                if (r == p) continue;
                ++prof[static_cast<std::size_t>(p)][std::popcount(pq & d.through_mask(r))];
            }
        }
    return prof;
}

}  // namespace

std::optional<Permutation> is_isomorphic(const Design& a, const Design& b) {
    auto ra = validate_symmetric_design(a);
    auto rb = validate_symmetric_design(b);
    if (!ra.ok()) throw std::invalid_argument("isomorphism test on invalid design: " + ra.errors.front());
    if (!rb.ok()) throw std::invalid_argument("isomorphism test on invalid design: " + rb.errors.front());
    if (ra.v != rb.v || ra.block_size != rb.block_size || ra.lambda != rb.lambda) return std::nullopt;

    auto prof_a = triple_profiles(a);
    auto prof_b = triple_profiles(b);
    std::vector<std::uint64_t> candidates(static_cast<std::size_t>(a.v()), 0);
    for (int p = 0; p < a.v(); ++p) {
        for (int q = 0; q < b.v(); ++q)
            if (prof_a[static_cast<std::size_t>(p)] == prof_b[static_cast<std::size_t>(q)])
                candidates[static_cast<std::size_t>(p)] |= std::uint64_t{1} << q;
        if (candidates[static_cast<std::size_t>(p)] == 0) return std::nullopt;
    }

    MapSearchOptions opt;
    opt.limit = 1;
    auto result = search_block_maps(a, b, candidates, opt);
    if (result.maps.empty()) return std::nullopt;
    if (apply(result.maps.front(), a) != b)
        throw invariant_violation("isomorphism witness fails to map block lists");
    return result.maps.front();
}

}  // namespace pyra
