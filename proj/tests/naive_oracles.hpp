#pragma once

// Deliberately slow re-derivations of the library's core answers, written
// against std::set so they share no code with the bit-vector implementation.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "pyra/design.hpp"

namespace naive {

using PointSet = std::set<int>;

inline PointSet to_set(const pyra::Block& b) {
    auto pts = b.points();
    return PointSet(pts.begin(), pts.end());
}

inline std::vector<PointSet> to_sets(const pyra::Design& d) {
    std::vector<PointSet> out;
    for (const auto& b : d.blocks()) out.push_back(to_set(b));
    return out;
}

inline PointSet sym_diff(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(out, out.end()));
    return out;
}

inline int intersect_count(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return static_cast<int>(out.size());
}

struct Params {
    int v, k, lambda;
};

// Full re-check of the symmetric design conditions by direct counting.
inline std::optional<Params> validate(int v, const std::vector<PointSet>& blocks) {
    if (static_cast<int>(blocks.size()) != v) return std::nullopt;
    int k = static_cast<int>(blocks.front().size());
    for (const auto& b : blocks)
        if (static_cast<int>(b.size()) != k) return std::nullopt;
    int lambda = -1;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            int meet = intersect_count(blocks[i], blocks[j]);
            if (lambda == -1) lambda = meet;
            if (meet != lambda) return std::nullopt;
        }
    for (int p = 0; p < v; ++p) {
        int through = 0;
        for (const auto& b : blocks) through += b.count(p) ? 1 : 0;
        if (through != k) return std::nullopt;
    }
    return Params{v, k, lambda};
}

// Third point of the design line through p and q by scanning every candidate
// and every block (no through-mask identity involved).
inline std::optional<int> line_third_point(const pyra::Design& d, int p, int q) {
    auto blocks = to_sets(d);
    for (int t = 0; t < d.v(); ++t) {
        if (t == p || t == q) continue;
        bool covered = false;
        for (const auto& b : blocks)
            if (b.count(p) && b.count(q) && b.count(t)) {
                covered = true;
                break;
            }
        if (!covered) return t;
    }
    return std::nullopt;
}

// Every clique of exactly `size` pairwise-collinear 2m-subsets of {0..n-1},
// grown one subset at a time over an explicit list of candidates. Each clique
// is a set of point sets, so the result order carries no meaning.
inline std::vector<std::set<PointSet>> cliques(int n, int m, int size) {
    std::vector<PointSet> vertices;
    std::vector<int> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = i;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + 2 * m, true);
    std::sort(pick.begin(), pick.end());
    do {
        PointSet s;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) s.insert(i);
        vertices.push_back(std::move(s));
    } while (std::next_permutation(pick.begin(), pick.end()));

    std::vector<std::set<PointSet>> out;
    std::vector<std::size_t> chosen;
    auto collinear = [&](const PointSet& a, const PointSet& b) {
        return intersect_count(a, b) == m;
    };
    auto grow = [&](auto&& self, std::size_t next) -> void {
        if (static_cast<int>(chosen.size()) == size) {
            std::set<PointSet> c;
            for (std::size_t i : chosen) c.insert(vertices[i]);
            out.push_back(std::move(c));
            return;
        }
        for (std::size_t i = next; i < vertices.size(); ++i) {
            bool fits = true;
            for (std::size_t j : chosen)
                if (!collinear(vertices[i], vertices[j])) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    grow(grow, 0);
    return out;
}

// All automorphisms fixing `fixed` pointwise, by trying every permutation of
// the moved points (feasible up to 8 moved points).
inline std::vector<pyra::Permutation> pointwise_stabilizer(const pyra::Design& d,
                                                           const std::set<int>& fixed) {
    std::vector<int> moved;
    for (int p = 0; p < d.v(); ++p)
        if (!fixed.count(p)) moved.push_back(p);

    auto blocks = to_sets(d);
    std::set<PointSet> block_set(blocks.begin(), blocks.end());

    std::vector<int> target = moved;
    std::vector<pyra::Permutation> out;
    std::sort(target.begin(), target.end());
    do {
        std::vector<int> images(static_cast<std::size_t>(d.v()));
        for (int p = 0; p < d.v(); ++p) images[static_cast<std::size_t>(p)] = p;
        for (std::size_t i = 0; i < moved.size(); ++i)
            images[static_cast<std::size_t>(moved[i])] = target[i];

        bool automorphism = true;
        for (const auto& b : blocks) {
            PointSet image;
            for (int p : b) image.insert(images[static_cast<std::size_t>(p)]);
            if (!block_set.count(image)) {
                automorphism = false;
                break;
            }
        }
        if (automorphism) out.emplace_back(std::move(images));
    } while (std::next_permutation(target.begin(), target.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace naive
