#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "naive_oracles.hpp"
#include "pyra/analysis.hpp"
#include "pyra/geometry.hpp"

using pyra::Block;
using pyra::Design;

TEST_SUITE("block incidence") {
    TEST_CASE("blocks through and avoiding a point partition the indices") {
        const Design& d = fixtures::d7();
        CHECK(pyra::blocks_through(d, 0) == std::vector<int>{0, 1, 4, 5});
        CHECK(pyra::blocks_avoiding(d, 0) == std::vector<int>{2, 3, 6});
        for (int p = 0; p < d.v(); ++p) {
            auto in = pyra::blocks_through(d, p);
            auto out = pyra::blocks_avoiding(d, p);
            CHECK(in.size() == 4);
            CHECK(out.size() == 3);
            std::set<int> all(in.begin(), in.end());
            all.insert(out.begin(), out.end());
            CHECK(all.size() == 7);
        }
    }
}

TEST_SUITE("design lines") {
    TEST_CASE("a frozen example on the running design") {
        auto line = pyra::design_line(fixtures::d7(), 3, 4);
        REQUIRE(line.has_value());
        CHECK(line->p == 3);
        CHECK(line->q == 4);
        CHECK(line->t == 2);

        // no block contains the whole triple
        for (const auto& b : fixtures::d7().blocks())
            CHECK_FALSE((b.contains(3) && b.contains(4) && b.contains(2)));
    }

    TEST_CASE("agreement with a blockwise scan") {
        const Design& d = fixtures::d7();
        for (int p = 0; p < d.v(); ++p)
            for (int q = 0; q < d.v(); ++q) {
                if (p == q) continue;
                auto line = pyra::design_line(d, p, q);
                auto slow = naive::line_third_point(d, p, q);
                REQUIRE(line.has_value() == slow.has_value());
                if (line) CHECK(line->t == *slow);
            }
    }

    TEST_CASE("the third point is symmetric in its inputs") {
        const Design& d = pyra::pg_hyperplane_complement_design(4);
        auto a = pyra::design_line(d, 2, 9);
        auto b = pyra::design_line(d, 9, 2);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(a->t == b->t);
        // and rotating the roles lands back on the pair
        auto c = pyra::design_line(d, 2, a->t);
        REQUIRE(c.has_value());
        CHECK(c->t == 9);
    }

    TEST_CASE("identical points are rejected") {
        CHECK_THROWS_AS((void)pyra::design_line(fixtures::d7(), 3, 3), std::invalid_argument);
    }

    TEST_CASE("hyperplane complements are collinear everywhere") {
        for (int rank : {3, 4}) {
            Design d = pyra::pg_hyperplane_complement_design(rank);
            for (int p = 0; p < d.v(); ++p) {
                CHECK(pyra::is_center_point(d, p));
                for (int q = p + 1; q < d.v(); ++q) {
                    auto line = pyra::design_line(d, p, q);
                    REQUIRE(line.has_value());
                    // vectors p+1, q+1 sum to t+1 in the binary space
                    CHECK(line->t == ((p + 1) ^ (q + 1)) - 1);
                }
            }
        }
    }
}

TEST_SUITE("classification criterion") {
    TEST_CASE("the small members of the family pass") {
        CHECK(pyra::satisfies_pg_criterion(pyra::pg_hyperplane_complement_design(2)));
        CHECK(pyra::satisfies_pg_criterion(pyra::pg_hyperplane_complement_design(3)));
        CHECK(pyra::satisfies_pg_criterion(pyra::pg_hyperplane_complement_design(4)));
        CHECK(pyra::satisfies_pg_criterion(pyra::pg_hyperplane_complement_design(5)));
        CHECK(pyra::satisfies_pg_criterion(fixtures::d7()));
    }

    TEST_CASE("wrong parameters are a domain error, not a negative answer") {
        Design fano(7, {
                           Block::from_points(7, {0, 1, 2}),
                           Block::from_points(7, {0, 3, 4}),
                           Block::from_points(7, {0, 5, 6}),
                           Block::from_points(7, {1, 3, 5}),
                           Block::from_points(7, {1, 4, 6}),
                           Block::from_points(7, {2, 3, 6}),
                           Block::from_points(7, {2, 4, 5}),
                       });
        REQUIRE(pyra::validate_symmetric_design(fano).ok());  // a (7,3,1) design
        CHECK_THROWS_AS((void)pyra::satisfies_pg_criterion(fano), std::domain_error);

        Design invalid(7, {Block::from_points(7, {0, 1, 2, 3})});
        CHECK_THROWS_AS((void)pyra::satisfies_pg_criterion(invalid), std::domain_error);
    }

    TEST_CASE("criterion matches isomorphism with the reference model") {
        // the thirty full cliques at rank 3 are exactly the designs that pass
        auto cliques = pyra::enumerate_cliques(pyra::GeometryParams(7, 2), 7);
        Design pg3 = pyra::pg_hyperplane_complement_design(3);
        for (const auto& d : cliques) {
            CHECK(pyra::satisfies_pg_criterion(d));
            CHECK(pyra::is_isomorphic(d, pg3).has_value());
        }
    }
}

TEST_SUITE("center blocks") {
    TEST_CASE("at seven points every block is central") {
        // the block set of a (7,4,2) design is closed under symmetric
        // difference, so the notion only separates blocks at higher ranks
        auto centers = pyra::center_blocks(fixtures::d7());
        CHECK(centers == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
        CHECK(pyra::is_center_block(fixtures::d7(), fixtures::d7_center_index));
        CHECK(fixtures::d7().block(fixtures::d7_center_index) ==
              Block::from_points(7, {3, 4, 5, 6}));
    }

    TEST_CASE("every block of a hyperplane complement design is central") {
        for (int rank : {3, 4}) {
            Design d = pyra::pg_hyperplane_complement_design(rank);
            auto centers = pyra::center_blocks(d);
            CHECK(static_cast<int>(centers.size()) == d.block_count());
        }
    }

    TEST_CASE("a sum away from the reference model has non-central blocks") {
        const Design& d = fixtures::non_pg_r4();
        auto summed = d.index_of(fixtures::non_pg_r4_center());
        REQUIRE(summed.has_value());
        CHECK(pyra::is_center_block(d, *summed));

        auto centers = pyra::center_blocks(d);
        CHECK(centers.size() < static_cast<std::size_t>(d.block_count()));

        // a center block closes against everything, a non-center block
        // escapes at least once
        for (int i = 0; i < d.block_count(); ++i) {
            bool closes = true;
            for (int j = 0; j < d.block_count(); ++j) {
                if (j == i) continue;
                if (!d.has_block(pyra::sym_diff(d.block(i), d.block(j)))) closes = false;
            }
            CHECK(closes == pyra::is_center_block(d, i));
        }
    }

    TEST_CASE("duality swaps center blocks and center points") {
        // block i of a design is point i of its dual
        for (const Design& d : {fixtures::d7(), fixtures::non_pg_r4()}) {
            Design dual = pyra::dual_design(d);
            for (int i = 0; i < d.block_count(); ++i)
                CHECK(pyra::is_center_block(d, i) == pyra::is_center_point(dual, i));
        }
    }
}

TEST_SUITE("line structure at a center point") {
    // with every point collinear, lines through a fixed point p pair off the
    // remaining points; blocks through p hit each pair once and blocks
    // avoiding p are unions of pairs
    static void check_partition(const Design& d) {
        for (int p = 0; p < d.v(); ++p) {
            if (!pyra::is_center_point(d, p)) continue;
            std::set<int> seen;
            std::vector<std::pair<int, int>> pairs;
            for (int q = 0; q < d.v(); ++q) {
                if (q == p || seen.count(q)) continue;
                auto line = pyra::design_line(d, p, q);
                REQUIRE(line.has_value());
                CHECK_FALSE(seen.count(line->t));
                seen.insert(q);
                seen.insert(line->t);
                pairs.emplace_back(q, line->t);
            }
            CHECK(static_cast<int>(seen.size()) == d.v() - 1);

            for (int i : pyra::blocks_through(d, p))
                for (auto [q, t] : pairs)
                    CHECK(d.block(i).contains(q) + d.block(i).contains(t) == 1);
            for (int i : pyra::blocks_avoiding(d, p))
                for (auto [q, t] : pairs)
                    CHECK(d.block(i).contains(q) == d.block(i).contains(t));
        }
    }

    TEST_CASE("holds on the running design") { check_partition(fixtures::d7()); }
    TEST_CASE("holds at rank 4") { check_partition(pyra::pg_hyperplane_complement_design(4)); }
}
