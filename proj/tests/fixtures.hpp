#pragma once

#include "pyra/decomposition.hpp"
#include "pyra/design.hpp"
#include "pyra/geometry.hpp"

namespace fixtures {

// The running (7,4,2) example: blocks listed in construction order, the
// Design constructor canonicalizes. Block {3,4,5,6} ends up at index 6.
inline const pyra::Design& d7() {
    static const pyra::Design d(7, {
                                       pyra::Block::from_points(7, {3, 4, 5, 6}),
                                       pyra::Block::from_points(7, {0, 1, 3, 4}),
                                       pyra::Block::from_points(7, {0, 1, 5, 6}),
                                       pyra::Block::from_points(7, {0, 2, 3, 5}),
                                       pyra::Block::from_points(7, {0, 2, 4, 6}),
                                       pyra::Block::from_points(7, {1, 2, 4, 5}),
                                       pyra::Block::from_points(7, {1, 2, 3, 6}),
                                   });
    return d;
}

inline constexpr int d7_center_index = 6;  // canonical index of {3,4,5,6}

// A (15,8,4) design that is not a hyperplane complement, for negative
// cases: unlike at 7 points, here some blocks are not center blocks. It is
// the sum of two rank-3 components over the first non-identity-like
// bijection (swapping components 5 and 6) that breaks the criterion.
inline pyra::Block non_pg_r4_center() {
    pyra::Block center(15);
    for (int p = 7; p < 15; ++p) center.add(p);
    return center;
}

inline const pyra::Design& non_pg_r4() {
    static const pyra::Design d = [] {
        pyra::Design pg3 = pyra::pg_hyperplane_complement_design(3);
        pyra::Block center = non_pg_r4_center();
        pyra::Block z = pyra::sym_diff(center, pyra::Block::from_points(15, {14}));
        std::vector<std::pair<int, int>> delta = {{0, 0}, {1, 1}, {2, 2}, {3, 3},
                                                  {4, 4}, {5, 6}, {6, 5}};
        return pyra::sum_construction(center, pg3, z, pg3, delta);
    }();
    return d;
}

}  // namespace fixtures
