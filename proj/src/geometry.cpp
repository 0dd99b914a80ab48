#include "pyra/geometry.hpp"

#include <algorithm>
#include <functional>

namespace pyra {

Design pg_hyperplane_complement_design(int rank) {
    if (rank < 2) throw std::invalid_argument("rank must be at least 2");
    if (rank > 6) throw std::invalid_argument("rank above 6 exceeds the 63-point representation");
    int v = (1 << rank) - 1;
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(v));
    for (int a = 1; a <= v; ++a) {
        Block b(v);
        for (int i = 0; i < v; ++i)
            if (std::popcount(static_cast<unsigned>(a & (i + 1))) % 2 == 1) b.add(i);
        blocks.push_back(b);
    }
    return Design(v, std::move(blocks));
}

bool collinear(const Block& x, const Block& y, int m) {
    if (x.size() != 2 * m || y.size() != 2 * m)
        throw std::invalid_argument("collinearity is defined on 2m-subsets");
    if (x == y) return false;
    return intersect_count(x, y) == m;
}

std::array<Block, 3> line_through(const Block& x, const Block& y, int m) {
    if (!collinear(x, y, m)) throw std::domain_error("points are not collinear");
    return {x, y, x ^ y};
}

bool is_singular_subspace(std::span<const Block> blocks, int m) {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            if (!collinear(blocks[i], blocks[j], m)) return false;
            Block third = blocks[i] ^ blocks[j];
            if (std::find(blocks.begin(), blocks.end(), third) == blocks.end()) return false;
        }
    return true;
}

namespace {

unsigned long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    return r;
}

// Adjacency rows over dynamic word arrays; vertex counts can exceed 64.
struct VertexSet {
    std::vector<std::uint64_t> w;

    explicit VertexSet(std::size_t n) : w((n + 63) / 64, 0) {}
    void add(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool intersect_with(const VertexSet& o) {  // returns true if nonempty
        std::uint64_t any = 0;
        for (std::size_t i = 0; i < w.size(); ++i) any |= (w[i] &= o.w[i]);
        return any != 0;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    void clear_below(std::size_t i) {  // drop vertices < i
        std::size_t word = i / 64;
        for (std::size_t j = 0; j < word; ++j) w[j] = 0;
        if (word < w.size() && i % 64) w[word] &= ~((std::uint64_t{1} << (i % 64)) - 1);
    }
};

void extend_clique(const std::vector<VertexSet>& adj, std::size_t target,
                   std::vector<std::size_t>& current, VertexSet cand,
                   const std::function<void(const std::vector<std::size_t>&)>& emit) {
    if (current.size() == target) {
        emit(current);
        return;
    }
    if (current.size() + cand.count() < target) return;
    for (std::size_t word = 0; word < cand.w.size(); ++word) {
        std::uint64_t bits = cand.w[word];
        while (bits) {
            std::size_t u = word * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            VertexSet next = cand;
            next.clear_below(u + 1);
            next.intersect_with(adj[u]);
            current.push_back(u);
            extend_clique(adj, target, current, std::move(next), emit);
            current.pop_back();
        }
    }
}

}  // namespace

std::vector<Design> enumerate_cliques(const GeometryParams& params, int target_size,
                                      const CliqueSearchOptions& options) {
    if (target_size < 1) throw std::invalid_argument("target clique size must be positive");
    unsigned long long vertex_count = choose(params.n, 2 * params.m);
    if (vertex_count > options.vertex_budget)
        throw resource_error("vertex count " + std::to_string(vertex_count) + " exceeds budget " +
                             std::to_string(options.vertex_budget));

    // vertices: all 2m-subsets in canonical (mask value) order
    std::vector<Block> verts;
    verts.reserve(static_cast<std::size_t>(vertex_count));
    std::uint64_t limit = std::uint64_t{1} << params.n;
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        if (std::popcount(mask) == 2 * params.m) verts.emplace_back(params.n, mask);

    std::size_t n = verts.size();
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (intersect_count(verts[i], verts[j]) == params.m) {
                adj[i].add(j);
                adj[j].add(i);
            }

    std::vector<Design> found;
    VertexSet all(n);
    for (std::size_t i = 0; i < n; ++i) all.add(i);
    std::vector<std::size_t> current;
    extend_clique(adj, static_cast<std::size_t>(target_size), current, all,
                  [&](const std::vector<std::size_t>& clique) {
                      std::vector<Block> blocks;
                      blocks.reserve(clique.size());
                      for (auto i : clique) blocks.push_back(verts[i]);
                      found.emplace_back(params.n, std::move(blocks));
                  });
    return found;
}

}  // namespace pyra
