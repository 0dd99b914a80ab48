#include "pyra/mapsearch.hpp"

#include <algorithm>
#include <chrono>

namespace pyra {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Backtracking state. Frames are copied wholesale on branch entry; with
// at most 63 points and 64 blocks a frame stays near one kilobyte.
struct Frame {
    std::vector<std::uint64_t> cand_pts;  // per source point: allowed target points
    std::vector<std::uint64_t> cand_blk;  // per source block: allowed target blocks
    std::vector<int> images;
    std::uint64_t assigned = 0;   // source points with a fixed image
    std::uint64_t used = 0;       // target points already taken
    std::uint64_t resolved = 0;   // source blocks whose singleton was propagated
};

struct Searcher {
    int v = 0;
    int nb = 0;
    std::vector<std::uint64_t> b1, b2;  // block masks of both designs
    std::vector<std::uint64_t> thr2;    // target point -> mask of target blocks containing it

    MapSearchOptions opt;
    MapSearchResult out;
    bool budget_hit = false;
    bool limit_hit = false;
    Clock::time_point deadline{};
    bool timed = false;

    bool over_budget() {
        if (opt.node_budget && out.nodes > opt.node_budget) return true;
        if (timed && (out.nodes & 1023) == 0 && Clock::now() > deadline) return true;
        return false;
    }

    // Fixes image p -> tp and refines every block candidate set with the
    // membership pattern of the new pair. Returns false on a wipeout.
    bool assign(Frame& f, int p, int tp) {
        f.images[static_cast<std::size_t>(p)] = tp;
        f.assigned |= bit(p);
        f.used |= bit(tp);
        f.cand_pts[static_cast<std::size_t>(p)] = bit(tp);
        std::uint64_t tmask = thr2[static_cast<std::size_t>(tp)];
        for (int i = 0; i < nb; ++i) {
            std::uint64_t allowed = (b1[static_cast<std::size_t>(i)] >> p) & 1 ? tmask : ~tmask;
            if ((f.cand_blk[static_cast<std::size_t>(i)] &= allowed) == 0) return false;
        }
        for (int q = 0; q < v; ++q) {
            if (f.assigned & bit(q)) continue;
            if ((f.cand_pts[static_cast<std::size_t>(q)] &= ~bit(tp)) == 0) return false;
        }
        return true;
    }

    // Runs singleton-block and forced-point propagation to a fixed point.
    bool propagate(Frame& f) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < nb; ++i) {
                std::uint64_t c = f.cand_blk[static_cast<std::size_t>(i)];
                if (c == 0) return false;
                if ((c & (c - 1)) != 0 || (f.resolved & bit(i))) continue;
                f.resolved |= bit(i);
                int j = std::countr_zero(c);
                // a block image may be taken once
                for (int i2 = 0; i2 < nb; ++i2) {
                    if (i2 == i) continue;
                    std::uint64_t& c2 = f.cand_blk[static_cast<std::size_t>(i2)];
                    if (c2 & bit(j)) {
                        c2 &= ~bit(j);
                        if (c2 == 0) return false;
                        changed = true;
                    }
                }
                // members of block i must land inside its image, others outside
                std::uint64_t inside = b2[static_cast<std::size_t>(j)];
                for (int q = 0; q < v; ++q) {
                    if (f.assigned & bit(q)) continue;
                    std::uint64_t allowed = (b1[static_cast<std::size_t>(i)] >> q) & 1 ? inside : ~inside;
                    std::uint64_t& cp = f.cand_pts[static_cast<std::size_t>(q)];
                    std::uint64_t refined = cp & allowed;
                    if (refined != cp) {
                        cp = refined;
                        if (cp == 0) return false;
                        changed = true;
                    }
                }
            }
            for (int q = 0; q < v; ++q) {
                if (f.assigned & bit(q)) continue;
                std::uint64_t cp = f.cand_pts[static_cast<std::size_t>(q)];
                if (cp == 0) return false;
                if ((cp & (cp - 1)) == 0) {
                    if (!assign(f, q, std::countr_zero(cp))) return false;
                    changed = true;
                }
            }
        }
        return true;
    }

    // Returns false to abort the whole search (budget or limit).
    bool dfs(const Frame& f) {
        ++out.nodes;
        if (over_budget()) {
            budget_hit = true;
            return false;
        }
        if (f.assigned == Block::all_mask(v)) {
            out.maps.emplace_back(f.images);
            if (opt.limit && out.maps.size() >= opt.limit) {
                limit_hit = true;
                return false;
            }
            return true;
        }
        int p = -1, best = 65;
        for (int q = 0; q < v; ++q) {
            if (f.assigned & bit(q)) continue;
            int c = std::popcount(f.cand_pts[static_cast<std::size_t>(q)]);
            if (c < best) {
                best = c;
                p = q;
            }
        }
        std::uint64_t options = f.cand_pts[static_cast<std::size_t>(p)];
        while (options) {
            int tp = std::countr_zero(options);
            options &= options - 1;
            Frame next = f;
            if (assign(next, p, tp) && propagate(next))
                if (!dfs(next)) return false;
        }
        return true;
    }
};

}  // namespace

MapSearchResult search_block_maps(const Design& from, const Design& to,
                                  const std::vector<std::uint64_t>& point_candidates,
                                  const MapSearchOptions& options) {
    if (point_candidates.size() != static_cast<std::size_t>(from.v()))
        throw std::invalid_argument("one candidate mask per source point required");

    Searcher s;
    s.opt = options;
    if (options.time_budget_seconds > 0) {
        s.timed = true;
        s.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(options.time_budget_seconds));
    }
    if (from.v() != to.v() || from.block_count() != to.block_count()) {
        s.out.complete = true;
        return s.out;
    }
    s.v = from.v();
    s.nb = from.block_count();
    for (const auto& b : from.blocks()) s.b1.push_back(b.mask());
    for (const auto& b : to.blocks()) s.b2.push_back(b.mask());
    for (int p = 0; p < s.v; ++p) s.thr2.push_back(to.through_mask(p));

    Frame root;
    root.cand_pts = point_candidates;
    for (auto& m : root.cand_pts) m &= Block::all_mask(s.v);
    root.cand_blk.assign(static_cast<std::size_t>(s.nb), 0);
    for (int i = 0; i < s.nb; ++i)
        for (int j = 0; j < s.nb; ++j)
            if (std::popcount(s.b1[static_cast<std::size_t>(i)]) == std::popcount(s.b2[static_cast<std::size_t>(j)]))
                root.cand_blk[static_cast<std::size_t>(i)] |= bit(j);
    root.images.assign(static_cast<std::size_t>(s.v), -1);

    if (s.propagate(root)) s.dfs(root);
    s.out.complete = !s.budget_hit;
    std::sort(s.out.maps.begin(), s.out.maps.end());
    return s.out;
}

}  // namespace pyra
