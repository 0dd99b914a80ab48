#include "pyra/decomposition.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "carrier.hpp"
#include "pyra/analysis.hpp"
#include "pyra/parallel.hpp"

namespace pyra {

namespace {

// v must be 2^r - 1 with r >= 3 for a decomposition to make sense.
int rank_from_v(int v) {
    unsigned vp1 = static_cast<unsigned>(v) + 1;
    if (v < 7 || !std::has_single_bit(vp1))
        throw std::domain_error("decomposition needs 2^r - 1 points with r >= 3");
    return std::bit_width(vp1) - 1;
}

void check_component(const Design& comp, int rank, const char* which) {
    int half = 1 << (rank - 1);
    auto rep = validate_symmetric_design(comp);
    if (!rep.ok())
        throw std::domain_error(std::string(which) + " component invalid: " + rep.errors.front());
    if (rep.v != half - 1 || rep.block_size != half / 2 || rep.lambda != half / 4)
        throw std::domain_error(std::string(which) + " component has parameters (" + std::to_string(rep.v) +
                                "," + std::to_string(rep.block_size) + "," + std::to_string(rep.lambda) +
                                "), expected (" + std::to_string(half - 1) + "," + std::to_string(half / 2) +
                                "," + std::to_string(half / 4) + ")");
}

void check_zed(const Block& center, const Block& z) {
    if (z.v() != center.v()) throw std::domain_error("Z lives on a different ground set");
    if (!z.subset_of(center) || z.size() != center.size() - 1)
        throw std::domain_error("Z must omit exactly one point of the center block");
}

void check_delta(const std::vector<std::pair<int, int>>& delta, int nb) {
    if (static_cast<int>(delta.size()) != nb) throw std::domain_error("delta size differs from block count");
    std::uint64_t left = 0, right = 0;
    for (auto [i, j] : delta) {
        if (i < 0 || i >= nb || j < 0 || j >= nb) throw std::domain_error("delta index out of range");
        if ((left >> i) & 1 || (right >> j) & 1) throw std::domain_error("delta is not a bijection");
        left |= std::uint64_t{1} << i;
        right |= std::uint64_t{1} << j;
    }
}

}  // namespace

Design sum_construction(const Block& center, const Design& design_o, const Block& z,
                        const Design& design_z, const std::vector<std::pair<int, int>>& delta) {
    int v = center.v();
    int rank = rank_from_v(v);
    int half = 1 << (rank - 1);
    if (center.size() != half)
        throw std::domain_error("center block size " + std::to_string(center.size()) + ", expected " +
                                std::to_string(half));
    check_zed(center, z);
    check_component(design_o, rank, "O-side");
    check_component(design_z, rank, "Z-side");
    if (design_o.v() != v - half || design_z.v() != half - 1)
        throw std::domain_error("component ground sets do not match the carriers");
    check_delta(delta, design_o.block_count());

    detail::CarrierMap oc_map(center.complement());
    detail::CarrierMap z_map(z);

    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(v));
    blocks.push_back(center);
    for (auto [i, j] : delta) {
        Block x = oc_map.embed(design_o.block(i));
        Block y = z_map.embed(design_z.block(j));
        blocks.push_back(x | y);
        blocks.push_back(x | (center ^ y));
    }
    Design result(v, std::move(blocks));

    auto rep = validate_symmetric_design(result);
    if (!rep.ok()) throw invariant_violation("sum is not a symmetric design: " + rep.errors.front());
    if (!is_center_block(result, *result.index_of(center)))
        throw invariant_violation("sum lost its center block");
    return result;
}

Design sum_construction(const DecompositionWitness& w) {
    return sum_construction(w.center, w.design_o, w.z, w.design_z, w.delta);
}

DecompositionWitness decompose(const Design& d, int center_index, const Block& z) {
    auto params = design_params(d);
    int rank = rank_from_v(params.v);
    int half = 1 << (rank - 1);
    if (params.k != half || params.lambda != half / 2)
        throw std::domain_error("design parameters are not (2^r-1, 2^(r-1), 2^(r-2))");
    if (center_index < 0 || center_index >= d.block_count()) throw std::out_of_range("center index out of range");
    if (!is_center_block(d, center_index)) throw std::domain_error("selected block is not a center block");

    const Block& center = d.block(center_index);
    check_zed(center, z);
    int p_prime = (center ^ z).min_point();

    detail::CarrierMap oc_map(center.complement());
    detail::CarrierMap z_map(z);

    // Each outside trace is shared by exactly two blocks, whose center
    // traces are complementary; the Z-side keeps the one avoiding p_prime.
    std::vector<Block> o_blocks;
    std::vector<std::pair<Block, Block>> trace_pairs;  // (local outside trace, local Z trace)
    for (int j = 0; j < d.block_count(); ++j) {
        if (j == center_index) continue;
        const Block& b = d.block(j);
        Block outside = oc_map.localize(b & center.complement());
        if (std::find(o_blocks.begin(), o_blocks.end(), outside) != o_blocks.end()) continue;
        o_blocks.push_back(outside);
        Block center_trace = b & center;
        if (center_trace.contains(p_prime)) center_trace = center ^ center_trace;
        if (center_trace.contains(p_prime))
            throw invariant_violation("both center traces contain the excluded point");
        trace_pairs.emplace_back(outside, z_map.localize(center_trace));
    }
    if (o_blocks.size() != static_cast<std::size_t>(half - 1))
        throw invariant_violation("outside traces do not pair up two-to-one");

    Design design_o(half - 1, o_blocks);
    std::vector<Block> z_blocks;
    z_blocks.reserve(trace_pairs.size());
    for (auto& [o, zt] : trace_pairs) z_blocks.push_back(zt);
    Design design_z(half - 1, z_blocks);

    std::vector<std::pair<int, int>> delta;
    delta.reserve(trace_pairs.size());
    for (auto& [o, zt] : trace_pairs) delta.emplace_back(*design_o.index_of(o), *design_z.index_of(zt));
    std::sort(delta.begin(), delta.end());

    DecompositionWitness w{params.v, center, z, p_prime, std::move(design_o), std::move(design_z),
                           std::move(delta)};
    if (sum_construction(w) != d) throw invariant_violation("decomposition does not reassemble the design");
    return w;
}

DecompositionWitness transfer_delta(const DecompositionWitness& w, const Block& z_prime) {
    check_zed(w.center, z_prime);
    int p2 = (w.center ^ z_prime).min_point();

    detail::CarrierMap old_map(w.z);
    detail::CarrierMap new_map(z_prime);

    // A Z-side block keeps its trace when that trace avoids the newly
    // excluded point; otherwise the complementary center trace takes over.
    std::vector<Block> new_blocks(w.delta.size(), Block(new_map.local_v()));
    for (auto [i, j] : w.delta) {
        Block ambient = old_map.embed(w.design_z.block(j));
        if (ambient.contains(p2)) ambient = w.center ^ ambient;
        new_blocks[static_cast<std::size_t>(i)] = new_map.localize(ambient);
    }
    Design design_z(new_map.local_v(), new_blocks);
    std::vector<std::pair<int, int>> delta;
    delta.reserve(new_blocks.size());
    for (std::size_t i = 0; i < new_blocks.size(); ++i)
        delta.emplace_back(static_cast<int>(i), *design_z.index_of(new_blocks[i]));

    return DecompositionWitness{w.v,      w.center, z_prime, p2, w.design_o, std::move(design_z),
                                std::move(delta)};
}

ZClassification classify_z_components(const Design& d, int center_index) {
    if (center_index < 0 || center_index >= d.block_count()) throw std::out_of_range("center index out of range");
    const Block& center = d.block(center_index);

    ZClassification out;
    for (int p_prime : center.points()) {
        Block z(d.v(), center.mask() & ~(std::uint64_t{1} << p_prime));
        auto w = decompose(d, center_index, z);
        out.evidence.push_back({p_prime, satisfies_pg_criterion(w.design_z)});
    }
    out.all_pg = out.evidence.front().pg;
    for (const auto& e : out.evidence)
        if (e.pg != out.all_pg)
            throw invariant_violation("PG verdict differs between two choices of Z (excluded points " +
                                      std::to_string(out.evidence.front().excluded_point) + " and " +
                                      std::to_string(e.excluded_point) + ")");
    return out;
}

namespace {

const std::array<unsigned long long, 21> factorial_table = [] {
    std::array<unsigned long long, 21> f{};
    f[0] = 1;
    for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
    return f;
}();

std::vector<int> permutation_from_rank(unsigned long long rank, int n) {
    std::vector<int> avail(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) avail[static_cast<std::size_t>(i)] = i;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        unsigned long long f = factorial_table[static_cast<std::size_t>(i)];
        std::size_t idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(avail[idx]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

}  // namespace

std::vector<DeltaMap> delta_search(const Design& design_o, const Design& design_z,
                                   const Block& center, const Block& z,
                                   const std::function<bool(const Design&)>& predicate,
                                   const DeltaSearchOptions& options) {
    int v = center.v();
    int rank = rank_from_v(v);
    int half = 1 << (rank - 1);
    if (center.size() != half) throw std::domain_error("center block has the wrong size");
    check_zed(center, z);
    check_component(design_o, rank, "O-side");
    check_component(design_z, rank, "Z-side");

    int nb = design_o.block_count();
    detail::CarrierMap oc_map(center.complement());
    detail::CarrierMap z_map(z);
    std::vector<Block> xs, ys;
    for (int i = 0; i < nb; ++i) xs.push_back(oc_map.embed(design_o.block(i)));
    for (int j = 0; j < nb; ++j) ys.push_back(z_map.embed(design_z.block(j)));

    auto design_for = [&](const std::vector<int>& sigma) {
        std::vector<Block> blocks;
        blocks.reserve(static_cast<std::size_t>(v));
        blocks.push_back(center);
        for (int i = 0; i < nb; ++i) {
            const Block& y = ys[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
            blocks.push_back(xs[static_cast<std::size_t>(i)] | y);
            blocks.push_back(xs[static_cast<std::size_t>(i)] | (center ^ y));
        }
        return Design(v, std::move(blocks));
    };

    auto as_delta = [&](const std::vector<int>& sigma) {
        DeltaMap dm;
        dm.reserve(static_cast<std::size_t>(nb));
        for (int i = 0; i < nb; ++i) dm.emplace_back(i, sigma[static_cast<std::size_t>(i)]);
        return dm;
    };

    if (static_cast<std::size_t>(nb) < factorial_table.size() &&
        factorial_table[static_cast<std::size_t>(nb)] <= options.exhaustive_limit) {
        unsigned long long total = factorial_table[static_cast<std::size_t>(nb)];
        std::vector<char> keep(static_cast<std::size_t>(total), 0);
        parallel_for(static_cast<std::size_t>(total), [&](std::size_t r) {
            auto sigma = permutation_from_rank(r, nb);
            if (predicate(design_for(sigma))) keep[r] = 1;
        });
        std::vector<DeltaMap> out;
        for (std::size_t r = 0; r < keep.size(); ++r)
            if (keep[r]) out.push_back(as_delta(permutation_from_rank(r, nb)));
        return out;
    }

    if (options.samples == 0)
        throw resource_error("bijection count exceeds the exhaustive ceiling " +
                             std::to_string(options.exhaustive_limit) + "; sampling must be requested");

    std::mt19937_64 rng(options.seed);
    std::size_t wanted = options.samples;
    if (static_cast<std::size_t>(nb) < factorial_table.size())
        wanted = std::min<std::size_t>(wanted, factorial_table[static_cast<std::size_t>(nb)]);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> sampled;
    while (sampled.size() < wanted) {
        std::vector<int> sigma(static_cast<std::size_t>(nb));
        for (int i = 0; i < nb; ++i) sigma[static_cast<std::size_t>(i)] = i;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        if (seen.insert(sigma).second) sampled.push_back(std::move(sigma));
    }
    std::vector<char> keep(sampled.size(), 0);
    parallel_for(sampled.size(), [&](std::size_t i) {
        if (predicate(design_for(sampled[i]))) keep[i] = 1;
    });
    std::vector<DeltaMap> out;
    for (std::size_t i = 0; i < sampled.size(); ++i)
        if (keep[i]) out.push_back(as_delta(sampled[i]));
    return out;
}

}  // namespace pyra
