#include <random>

#include "doctest.h"
#include "naive_oracles.hpp"
#include "pyra/block.hpp"

using pyra::Block;
using pyra::Permutation;

TEST_SUITE("block arithmetic") {
    TEST_CASE("symmetric difference matches the set definition") {
        Block a = Block::from_points(7, {0, 1, 2});
        Block b = Block::from_points(7, {1, 2, 3});
        CHECK(sym_diff(a, b) == Block::from_points(7, {0, 3}));
        CHECK(sym_diff(a, a) == Block(7));
        CHECK(sym_diff(Block::from_points(7, {3, 4, 5, 6}), Block::from_points(7, {0, 1, 3, 4})) ==
              Block::from_points(7, {0, 1, 5, 6}));
    }

    TEST_CASE("mismatched ground sets are rejected") {
        Block a = Block::from_points(7, {0, 1});
        Block b = Block::from_points(8, {0, 1});
        CHECK_THROWS_AS((void)sym_diff(a, b), std::invalid_argument);
        CHECK_THROWS_AS((void)(a & b), std::invalid_argument);
        CHECK_THROWS_AS((void)(a | b), std::invalid_argument);
    }

    TEST_CASE("intersection counting") {
        CHECK(intersect_count(Block::from_points(7, {0, 1, 3, 4}), Block::from_points(7, {0, 2, 3, 5})) == 2);
        CHECK(intersect_count(Block::from_points(7, {0, 1, 3, 4}), Block(7)) == 0);
        CHECK(intersect_count(Block::from_points(8, {1, 3, 5, 7}), Block::from_points(8, {1, 3, 5, 7})) == 4);
    }

    TEST_CASE("symmetric difference is commutative, associative and self-inverse") {
        std::mt19937_64 rng(20240817);
        for (int round = 0; round < 50; ++round) {
            int v = 5 + static_cast<int>(rng() % 50);
            std::uint64_t all = Block::all_mask(v);
            Block a(v, rng() & all), b(v, rng() & all), c(v, rng() & all);
            CHECK(sym_diff(a, b) == sym_diff(b, a));
            CHECK(sym_diff(sym_diff(a, b), c) == sym_diff(a, sym_diff(b, c)));
            CHECK(sym_diff(sym_diff(a, b), b) == a);

            // agreement with the std::set oracle
            CHECK(naive::to_set(sym_diff(a, b)) == naive::sym_diff(naive::to_set(a), naive::to_set(b)));
            CHECK(intersect_count(a, b) == naive::intersect_count(naive::to_set(a), naive::to_set(b)));
        }
    }

    TEST_CASE("membership bounds are enforced") {
        CHECK_THROWS_AS(Block(7, 0x80), std::invalid_argument);      // bit 7 outside {0..6}
        CHECK_THROWS_AS(Block::from_points(7, {7}), std::exception); // point == v
        CHECK_THROWS_AS(Block::from_points(7, {1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(Block(64), std::invalid_argument);
        CHECK_NOTHROW(Block(63));
    }

    TEST_CASE("point views and extremes") {
        Block b = Block::from_points(9, {2, 5, 8});
        CHECK(b.points() == std::vector<int>{2, 5, 8});
        CHECK(b.size() == 3);
        CHECK(b.min_point() == 2);
        CHECK(b.max_point() == 8);
        CHECK(b.complement() == Block::from_points(9, {0, 1, 3, 4, 6, 7}));
        CHECK(b.subset_of(Block(9, Block::all_mask(9))));
        CHECK_FALSE(Block::from_points(9, {2, 5, 8}).subset_of(Block::from_points(9, {2, 5})));
        CHECK_THROWS_AS(Block(9).min_point(), std::logic_error);
    }

    TEST_CASE("ordering follows the bit-vector value") {
        CHECK(Block::from_points(7, {0, 1}) < Block::from_points(7, {2}));
        CHECK(Block::from_points(7, {0}) < Block::from_points(7, {1}));
    }
}

TEST_SUITE("permutations") {
    TEST_CASE("only bijections are accepted") {
        CHECK_THROWS_AS(Permutation({0, 0, 2}), std::invalid_argument);
        CHECK_THROWS_AS(Permutation({0, 3, 1}), std::exception);
        CHECK_NOTHROW(Permutation({2, 0, 1}));
    }

    TEST_CASE("composition applies left to right") {
        Permutation a({1, 0, 2});  // swap 0,1
        Permutation b({0, 2, 1});  // swap 1,2
        Permutation ab = a.then(b);
        CHECK(ab(0) == 2);  // 0 -> 1 under a, then 1 -> 2 under b
        CHECK(ab(1) == 0);
        CHECK(ab(2) == 1);
    }

    TEST_CASE("inverse and involutions") {
        Permutation g({2, 0, 1});
        CHECK(g.then(g.inverse()).is_identity());
        CHECK(g.inverse().then(g).is_identity());
        CHECK_FALSE(g.is_involution());
        CHECK(Permutation({1, 0, 2}).is_involution());
        CHECK_FALSE(Permutation::identity(3).is_involution());  // order exactly 2
    }

    TEST_CASE("block image and support") {
        Permutation g({0, 1, 2, 6, 5, 4, 3});  // (3 6)(4 5)
        CHECK(g.apply(Block::from_points(7, {0, 1, 3, 4})) == Block::from_points(7, {0, 1, 5, 6}));
        CHECK(g.support() == Block::from_points(7, {3, 4, 5, 6}));
        CHECK(Permutation::identity(7).support() == Block(7));
    }
}
