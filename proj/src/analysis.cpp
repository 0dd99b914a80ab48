#include "pyra/analysis.hpp"

#include <bit>

namespace pyra {

namespace {

std::vector<int> indices_from_mask(std::uint64_t m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

void check_point(const Design& d, int p) {
    if (p < 0 || p >= d.v()) throw std::out_of_range("point " + std::to_string(p) + " outside the design");
}

}  // namespace

std::vector<int> blocks_through(const Design& d, int p) {
    check_point(d, p);
    return indices_from_mask(d.through_mask(p));
}

std::vector<int> blocks_avoiding(const Design& d, int p) {
    check_point(d, p);
    std::uint64_t all = d.block_count() == 64 ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << d.block_count()) - 1;
    return indices_from_mask(all & ~d.through_mask(p));
}

std::optional<DesignLine> design_line(const Design& d, int p, int q) {
    check_point(d, p);
    check_point(d, q);
    if (p == q) throw std::invalid_argument("design line needs two distinct points");
    std::uint64_t want = d.through_mask(p) ^ d.through_mask(q);
    for (int t = 0; t < d.v(); ++t) {
        if (t == p || t == q) continue;
        if (d.through_mask(t) == want) return DesignLine{p, q, t};
    }
    return std::nullopt;
}

bool is_center_point(const Design& d, int p) {
    check_point(d, p);
    for (int q = 0; q < d.v(); ++q)
        if (q != p && !design_line(d, p, q)) return false;
    return true;
}

bool satisfies_pg_criterion(const Design& d) {
    auto rep = validate_symmetric_design(d);
    if (!rep.ok()) throw std::domain_error("not a symmetric design: " + rep.errors.front());
    auto params = design_params(d);
    int vp1 = params.v + 1;
    if (!std::has_single_bit(static_cast<unsigned>(vp1)) || params.v < 3)
        throw std::domain_error("point count is not 2^r - 1 with r >= 2");
    if (params.k * 2 != vp1 || params.lambda * 4 != vp1)
        throw std::domain_error("parameters are not (2^r-1, 2^(r-1), 2^(r-2))");
    for (int p = 0; p < d.v(); ++p)
        if (!is_center_point(d, p)) return false;
    return true;
}

bool is_center_block(const Design& d, int i) {
    if (i < 0 || i >= d.block_count()) throw std::out_of_range("block index out of range");
    const Block& o = d.block(i);
    for (int j = 0; j < d.block_count(); ++j) {
        if (j == i) continue;
        if (!d.has_block(o ^ d.block(j))) return false;
    }
    return true;
}

std::vector<int> center_blocks(const Design& d) {
    std::vector<int> out;
    for (int i = 0; i < d.block_count(); ++i)
        if (is_center_block(d, i)) out.push_back(i);
    return out;
}

}  // namespace pyra
