#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "json.hpp"
#include "fixtures.hpp"
#include "pyra/analysis.hpp"
#include "pyra/geometry.hpp"
#include "pyra/json_io.hpp"

using pyra::Block;
using pyra::Design;

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("pyra-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("design files") {
    TEST_CASE("save and load round trip") {
        TempDir tmp;
        Design d = pyra::pg_hyperplane_complement_design(4);
        fs::path file = tmp.path / "pg4.json";
        pyra::save_design(d, file);
        CHECK(pyra::load_design(file) == d);
    }

    TEST_CASE("reads canonicalize any block order") {
        std::string text = R"({"v": 3, "blocks": [[1, 2], [0, 1], [0, 2]]})";
        Design d = pyra::design_from_json(text);
        CHECK(d.block(0) == Block::from_points(3, {0, 1}));
        CHECK(d.block(1) == Block::from_points(3, {0, 2}));
        CHECK(d.block(2) == Block::from_points(3, {1, 2}));
        // the canonical serialization is stable
        CHECK(pyra::design_to_json(d) == pyra::design_to_json(pyra::design_from_json(
                                             pyra::design_to_json(d))));
    }

    TEST_CASE("errors carry the offending location") {
        CHECK_THROWS_AS((void)pyra::design_from_json("{"), pyra::io_error);
        CHECK_THROWS_AS((void)pyra::design_from_json(R"({"blocks": []})"), pyra::io_error);
        CHECK_THROWS_AS((void)pyra::design_from_json(R"({"v": 3})"), pyra::io_error);
        CHECK_THROWS_AS((void)pyra::design_from_json(R"({"v": "three", "blocks": []})"),
                        pyra::io_error);
        CHECK_THROWS_AS((void)pyra::design_from_json(R"({"v": 3, "blocks": [[0, 1.5]]})"),
                        pyra::io_error);

        // out-of-range points name the offender
        try {
            (void)pyra::design_from_json(R"({"v": 3, "blocks": [[0, 3]]})");
            FAIL("expected io_error");
        } catch (const pyra::io_error& e) {
            CHECK(std::string(e.what()).find("3") != std::string::npos);
        }

        CHECK_THROWS_AS((void)pyra::load_design("/nonexistent/file.json"), pyra::io_error);
    }
}

TEST_SUITE("witness files") {
    TEST_CASE("round trip through the running decomposition") {
        TempDir tmp;
        auto w = pyra::decompose(fixtures::d7(), fixtures::d7_center_index,
                                 Block::from_points(7, {3, 4, 5}));
        fs::path file = tmp.path / "witness.json";
        pyra::save_witness(w, file);
        auto back = pyra::load_witness(file);
        CHECK(back.v == w.v);
        CHECK(back.center == w.center);
        CHECK(back.z == w.z);
        CHECK(back.p_prime == w.p_prime);
        CHECK(back.design_o == w.design_o);
        CHECK(back.design_z == w.design_z);
        CHECK(back.delta == w.delta);
        CHECK(pyra::sum_construction(back) == fixtures::d7());
    }

    TEST_CASE("Z must omit exactly one point of O") {
        auto w = pyra::decompose(fixtures::d7(), fixtures::d7_center_index,
                                 Block::from_points(7, {3, 4, 5}));
        auto text = pyra::witness_to_json(w);
        auto broken = text;
        auto pos = broken.find("\"Z\"");
        REQUIRE(pos != std::string::npos);
        broken.replace(broken.find('[', pos), broken.find(']', pos) - broken.find('[', pos) + 1,
                       "[3, 4, 5, 6]");
        try {
            (void)pyra::witness_from_json(broken);
            FAIL("expected io_error");
        } catch (const pyra::io_error& e) {
            CHECK(std::string(e.what()).find("Z") != std::string::npos);
        }
    }
}

TEST_SUITE("group and certificate files") {
    TEST_CASE("group lists round trip") {
        auto cert = pyra::build_group(fixtures::d7(), fixtures::d7_center_index);
        auto text = pyra::group_to_json(7, cert.elements);
        auto [v, elements] = pyra::group_from_json(text);
        CHECK(v == 7);
        CHECK(elements == cert.elements);
    }

    TEST_CASE("certificates rebuild their orbit table on load") {
        TempDir tmp;
        auto cert = pyra::build_group(fixtures::d7(), fixtures::d7_center_index);
        fs::path file = tmp.path / "cert.json";
        pyra::save_certificate(cert, file);
        auto back = pyra::load_certificate(file);
        CHECK(back.fixed_set == cert.fixed_set);
        CHECK(back.elements == cert.elements);
        CHECK(back.orbit_witness == cert.orbit_witness);
    }

    TEST_CASE("a tampered certificate fails to load") {
        auto cert = pyra::build_group(fixtures::d7(), fixtures::d7_center_index);
        auto doc = nlohmann::json::parse(pyra::certificate_to_json(cert));

        // dropping one element breaks sharp transitivity
        auto dropped = doc;
        dropped["elements"].erase(dropped["elements"].size() - 1);
        CHECK_THROWS_AS((void)pyra::certificate_from_json(dropped.dump()), pyra::io_error);

        // an element moving the fixed set breaks the pointwise condition
        auto moved = doc;
        moved["elements"][1] = {1, 0, 2, 6, 5, 4, 3};
        CHECK_THROWS_AS((void)pyra::certificate_from_json(moved.dump()), pyra::io_error);
    }
}

TEST_SUITE("digests") {
    TEST_CASE("stable across serialization order") {
        Design d = pyra::pg_hyperplane_complement_design(3);
        std::string shuffled = R"({"v": 7, "blocks": [[3, 4, 5, 6], [0, 2, 4, 6], [0, 1, 3, 4],)"
                               R"( [0, 1, 5, 6], [0, 2, 3, 5], [1, 2, 4, 5], [1, 2, 3, 6]]})";
        CHECK(pyra::design_digest(pyra::design_from_json(shuffled)) ==
              pyra::design_digest(fixtures::d7()));
        CHECK(pyra::design_digest(d).size() == 16);
    }

    TEST_CASE("different designs get different digests") {
        CHECK(pyra::design_digest(pyra::pg_hyperplane_complement_design(3)) !=
              pyra::design_digest(pyra::pg_hyperplane_complement_design(4)));
    }
}

TEST_SUITE("run reports") {
    TEST_CASE("serialization carries checks and timings") {
        pyra::RunReport rep;
        rep.command = "verify";
        rep.inputs["design.json"] = "0123456789abcdef";
        rep.checks.add("validate", true, "(7,4,2)");
        rep.checks.add("pg-criterion", false, "points 0 and 1 are not collinear");
        rep.timing_seconds["total"] = 0.25;
        CHECK_FALSE(rep.ok());

        auto text = rep.to_json();
        CHECK(text.find("\"verify\"") != std::string::npos);
        CHECK(text.find("\"pg-criterion\"") != std::string::npos);
        CHECK(text.find("\"ok\": false") != std::string::npos);
        CHECK(text.find("0123456789abcdef") != std::string::npos);
    }
}

TEST_SUITE("catalog") {
    TEST_CASE("add, re-tag, list") {
        TempDir tmp;
        pyra::Catalog cat(tmp.path / "catalog");

        Design pg3 = pyra::pg_hyperplane_complement_design(3);
        auto entry = cat.add(pg3, {"reference"}, "construct pg --rank 3");
        CHECK(entry.id == pyra::design_digest(pg3));
        CHECK(entry.parameters.v == 7);
        CHECK(entry.parameters.k == 4);
        CHECK(entry.parameters.lambda == 2);

        // the stored file reloads to the same design
        CHECK(pyra::load_design(tmp.path / "catalog" / entry.file) == pg3);

        // re-adding merges tags instead of duplicating
        cat.add(pg3, {"clique"}, "search cliques");
        Design pg4 = pyra::pg_hyperplane_complement_design(4);
        cat.add(pg4, {"reference"}, "construct pg --rank 4");

        auto entries = cat.entries();
        REQUIRE(entries.size() == 2);
        CHECK(entries[0].id < entries[1].id);
        for (const auto& e : entries) {
            if (e.id == entry.id) {
                CHECK(e.tags == std::vector<std::string>{"clique", "reference"});
            }
        }
    }

    TEST_CASE("a fresh directory starts empty") {
        TempDir tmp;
        pyra::Catalog cat(tmp.path / "nested" / "catalog");
        CHECK(cat.entries().empty());
    }
}
