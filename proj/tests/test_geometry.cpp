#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "naive_oracles.hpp"
#include "pyra/geometry.hpp"

using pyra::Block;
using pyra::Design;
using pyra::GeometryParams;

TEST_SUITE("hyperplane complement designs") {
    TEST_CASE("rank 2 gives the triangle") {
        Design d = pyra::pg_hyperplane_complement_design(2);
        CHECK(d.v() == 3);
        REQUIRE(d.block_count() == 3);
        CHECK(d.block(0) == Block::from_points(3, {0, 1}));
        CHECK(d.block(1) == Block::from_points(3, {0, 2}));
        CHECK(d.block(2) == Block::from_points(3, {1, 2}));
    }

    TEST_CASE("rank 3 contains the even-point block") {
        Design d = pyra::pg_hyperplane_complement_design(3);
        CHECK(d.v() == 7);
        CHECK(d.has_block(Block::from_points(7, {0, 2, 4, 6})));
        auto rep = pyra::validate_symmetric_design(d);
        REQUIRE(rep.ok());
        CHECK(rep.block_size == 4);
        CHECK(rep.lambda == 2);
    }

    TEST_CASE("parameters double along the rank ladder") {
        for (int rank = 2; rank <= 6; ++rank) {
            Design d = pyra::pg_hyperplane_complement_design(rank);
            auto rep = pyra::validate_symmetric_design(d);
            REQUIRE(rep.ok());
            CHECK(rep.v == (1 << rank) - 1);
            CHECK(rep.block_size == (1 << (rank - 1)));
            CHECK(rep.lambda == (1 << (rank - 2)));
        }
        CHECK_THROWS_AS((void)pyra::pg_hyperplane_complement_design(1), std::invalid_argument);
    }

    TEST_CASE("rank 4 contains the high halving block") {
        // the functional picking out the top address bit
        Design d = pyra::pg_hyperplane_complement_design(4);
        CHECK(d.has_block(Block::from_points(15, {7, 8, 9, 10, 11, 12, 13, 14})));
    }
}

TEST_SUITE("collinearity") {
    TEST_CASE("sharing exactly m points") {
        Block a = Block::from_points(9, {0, 1, 2, 3});
        Block b = Block::from_points(9, {2, 3, 4, 5});
        Block c = Block::from_points(9, {4, 5, 6, 7});
        Block d = Block::from_points(9, {0, 1, 2, 4});
        CHECK(pyra::collinear(a, b, 2));
        CHECK(pyra::collinear(b, c, 2));
        CHECK_FALSE(pyra::collinear(a, c, 2));     // disjoint
        CHECK_FALSE(pyra::collinear(a, d, 2));     // share 3
        CHECK_FALSE(pyra::collinear(a, a, 2));     // a point is not collinear with itself
        CHECK_THROWS_AS((void)pyra::collinear(a, Block::from_points(9, {0, 1}), 2),
                        std::invalid_argument);    // wrong size
    }

    TEST_CASE("the line through two collinear points") {
        Block x = Block::from_points(9, {0, 1, 2, 3});
        Block y = Block::from_points(9, {2, 3, 4, 5});
        auto line = pyra::line_through(x, y, 2);
        CHECK(line[0] == x);
        CHECK(line[1] == y);
        CHECK(line[2] == Block::from_points(9, {0, 1, 4, 5}));

        // the third point is collinear with both and the line is symmetric
        CHECK(pyra::collinear(line[2], x, 2));
        CHECK(pyra::collinear(line[2], y, 2));
        auto line2 = pyra::line_through(line[2], x, 2);
        CHECK(line2[2] == y);

        CHECK_THROWS_AS((void)pyra::line_through(x, Block::from_points(9, {4, 5, 6, 7}), 2),
                        std::domain_error);
    }

    TEST_CASE("blocks of the running example are pairwise collinear") {
        const Design& d = fixtures::d7();
        for (int i = 0; i < d.block_count(); ++i)
            for (int j = i + 1; j < d.block_count(); ++j) {
                CHECK(pyra::collinear(d.block(i), d.block(j), 2));
                auto line = pyra::line_through(d.block(i), d.block(j), 2);
                CHECK(d.has_block(line[2]));  // closed under symmetric difference
            }
    }
}

TEST_SUITE("singular subspaces") {
    TEST_CASE("recognized examples") {
        Design pg3 = pyra::pg_hyperplane_complement_design(3);
        CHECK(pyra::is_singular_subspace(pg3.blocks(), 2));
        CHECK(pyra::is_singular_subspace(fixtures::d7().blocks(), 2));

        std::vector<Block> one = {Block::from_points(7, {0, 1, 3, 4})};
        CHECK(pyra::is_singular_subspace(one, 2));
    }

    TEST_CASE("dropping a block breaks closure") {
        // remove a block other than the top one; the symmetric difference
        // of two remaining blocks lands on the removed one
        std::vector<Block> blocks;
        for (int i = 0; i < fixtures::d7().block_count(); ++i)
            if (i != 0) blocks.push_back(fixtures::d7().block(i));
        CHECK_FALSE(pyra::is_singular_subspace(blocks, 2));
    }

    TEST_CASE("pairwise collinear but not closed") {
        std::vector<Block> blocks = {Block::from_points(9, {0, 1, 2, 3}),
                                     Block::from_points(9, {2, 3, 4, 5}),
                                     Block::from_points(9, {1, 2, 4, 6})};
        CHECK(pyra::collinear(blocks[0], blocks[1], 2));
        CHECK(pyra::collinear(blocks[1], blocks[2], 2));
        CHECK(pyra::collinear(blocks[0], blocks[2], 2));
        CHECK_FALSE(pyra::is_singular_subspace(blocks, 2));
    }
}

TEST_SUITE("clique enumeration") {
    TEST_CASE("the 4-subsets of a 7-set carry exactly 30 full cliques") {
        auto cliques = pyra::enumerate_cliques(GeometryParams(7, 2), 7);
        CHECK(cliques.size() == 30);  // 7!/168: relabelings modulo the symmetries of one clique
        for (const auto& d : cliques) {
            auto rep = pyra::validate_symmetric_design(d);
            CHECK(rep.ok());
            CHECK(rep.block_size == 4);
            CHECK(rep.lambda == 2);
            CHECK(pyra::is_singular_subspace(d.blocks(), 2));
        }
        // no duplicates
        std::set<std::vector<Block>> seen;
        for (const auto& d : cliques) seen.insert(d.blocks());
        CHECK(seen.size() == cliques.size());
    }

    TEST_CASE("no clique of 8 points exists there") {
        CHECK(pyra::enumerate_cliques(GeometryParams(7, 2), 8).empty());
    }

    TEST_CASE("agreement with a naive enumeration") {
        auto fast = pyra::enumerate_cliques(GeometryParams(7, 2), 7);
        auto slow = naive::cliques(7, 2, 7);
        REQUIRE(fast.size() == slow.size());
        std::set<std::set<std::set<int>>> fast_keys, slow_keys;
        for (const auto& d : fast) {
            std::set<std::set<int>> key;
            for (const auto& b : naive::to_sets(d)) key.insert(b);
            fast_keys.insert(key);
        }
        for (const auto& c : slow) slow_keys.insert(std::set<std::set<int>>(c.begin(), c.end()));
        CHECK(fast_keys == slow_keys);
    }

    TEST_CASE("triangles in the 4-subsets of a 6-set are all lines") {
        auto triangles = pyra::enumerate_cliques(GeometryParams(6, 2), 3);
        CHECK_FALSE(triangles.empty());
        for (const auto& t : triangles) {
            REQUIRE(t.block_count() == 3);
            auto line = pyra::line_through(t.block(0), t.block(1), 2);
            CHECK(line[2] == t.block(2));
        }
    }

    TEST_CASE("too small an ambient set yields no collinear pairs") {
        CHECK(pyra::enumerate_cliques(GeometryParams(5, 2), 2).empty());
    }

    TEST_CASE("relabeling the ambient points permutes the clique list") {
        auto cliques = pyra::enumerate_cliques(GeometryParams(7, 2), 7);
        std::mt19937_64 rng(20240817);
        std::vector<int> images(7);
        for (int i = 0; i < 7; ++i) images[static_cast<std::size_t>(i)] = i;
        std::shuffle(images.begin(), images.end(), rng);
        pyra::Permutation g(images);

        std::set<std::vector<Block>> keys;
        for (const auto& d : cliques) keys.insert(d.blocks());
        for (const auto& d : cliques) {
            Design moved = pyra::apply(g, d);
            CHECK(keys.count(moved.blocks()) == 1);
        }
    }

    TEST_CASE("the vertex budget is enforced") {
        pyra::CliqueSearchOptions tight;
        tight.vertex_budget = 10;
        CHECK_THROWS_AS((void)pyra::enumerate_cliques(GeometryParams(7, 2), 7, tight),
                        pyra::resource_error);
    }
}
