#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pyra/acceptance.hpp"
#include "pyra/analysis.hpp"
#include "pyra/decomposition.hpp"
#include "pyra/design.hpp"
#include "pyra/geometry.hpp"
#include "pyra/json_io.hpp"
#include "pyra/pyramidal.hpp"

namespace {

using pyra::Block;
using pyra::Design;
using ordered_json = nlohmann::ordered_json;

std::vector<int> parse_points(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(std::stoi(token));
    return out;
}

pyra::DeltaMap parse_delta(const std::string& text) {
    pyra::DeltaMap out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        auto sep = token.find(':');
        if (sep == std::string::npos) throw CLI::ValidationError("--delta", "expected pairs like 0:2,1:0");
        out.emplace_back(std::stoi(token.substr(0, sep)), std::stoi(token.substr(sep + 1)));
    }
    return out;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pyra::io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return pyra::content_digest(buf.str());
}

Design load_input(pyra::RunReport& rep, const std::string& path) {
    rep.inputs[path] = file_digest(path);
    return pyra::load_design(path);
}

ordered_json design_value(const Design& d) {
    ordered_json blocks = ordered_json::array();
    for (const auto& b : d.blocks()) blocks.push_back(b.points());
    return ordered_json{{"v", d.v()}, {"blocks", std::move(blocks)}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw pyra::io_error("cannot write " + path);
    out << text << '\n';
}

std::string params_text(const pyra::ValidationReport& rep) {
    return "(" + std::to_string(rep.v) + "," + std::to_string(rep.block_size) + "," +
           std::to_string(rep.lambda) + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

void merge_report(pyra::RunReport& rep, const std::string& prefix, const pyra::Report& sub) {
    for (const auto& c : sub.checks) rep.checks.add(prefix + "/" + c.name, c.passed, c.detail);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction, decomposition and automorphism-group verification for symmetric designs "
                 "of the family (2^r-1, 2^(r-1), 2^(r-2))"};
    app.require_subcommand(1);
    app.fallthrough();  // let global options like --report appear after the subcommand

    std::string report_path;
    app.add_option("--report", report_path, "also write the run report as JSON to this path");

    std::function<void(pyra::RunReport&)> task;

    // ------------------------------------------------------------ construct
    auto* construct = app.add_subcommand("construct", "build a design and write it to disk");
    construct->require_subcommand(1);

    struct {
        int rank = 3;
        std::string out;
    } pg_args;
    auto* cpg = construct->add_subcommand("pg", "hyperplane-complement design of a binary space");
    cpg->add_option("--rank", pg_args.rank, "rank r; the design has 2^r-1 points")
        ->required()
        ->check(CLI::Range(2, 6));
    cpg->add_option("--out", pg_args.out, "output design file")->required();
    cpg->callback([&] {
        task = [&](pyra::RunReport& rep) {
            Design d = pyra::pg_hyperplane_complement_design(pg_args.rank);
            auto vrep = pyra::validate_symmetric_design(d);
            pyra::save_design(d, pg_args.out);
            rep.checks.add("construct-pg", vrep.ok(), params_text(vrep) + " written to " + pg_args.out);
        };
    });

    struct {
        std::string witness, design_o, design_z, center, z, delta, out;
    } sum_args;
    auto* csum = construct->add_subcommand("sum", "assemble a design from two components and a block bijection");
    csum->add_option("--witness", sum_args.witness, "decomposition witness file holding all inputs");
    csum->add_option("--design-o", sum_args.design_o, "outside component design file");
    csum->add_option("--design-z", sum_args.design_z, "center-side component design file");
    csum->add_option("--center", sum_args.center, "center block points, comma separated");
    csum->add_option("--z", sum_args.z, "Z points (center minus one point), comma separated");
    csum->add_option("--delta", sum_args.delta, "bijection as i:j pairs, comma separated (default identity)");
    csum->add_option("--out", sum_args.out, "output design file")->required();
    csum->callback([&] {
        task = [&](pyra::RunReport& rep) {
            std::optional<Design> built;
            if (!sum_args.witness.empty()) {
                rep.inputs[sum_args.witness] = file_digest(sum_args.witness);
                built = pyra::sum_construction(pyra::load_witness(sum_args.witness));
            } else {
                if (sum_args.design_o.empty() || sum_args.design_z.empty() || sum_args.center.empty() ||
                    sum_args.z.empty())
                    throw CLI::ValidationError("construct sum",
                                               "need --witness or all of --design-o --design-z --center --z");
                Design design_o = load_input(rep, sum_args.design_o);
                Design design_z = load_input(rep, sum_args.design_z);
                auto center_pts = parse_points(sum_args.center);
                int v = 2 * static_cast<int>(center_pts.size()) - 1;
                Block center = Block::from_points(v, center_pts);
                Block z = Block::from_points(v, parse_points(sum_args.z));
                pyra::DeltaMap delta;
                if (sum_args.delta.empty())
                    for (int i = 0; i < design_o.block_count(); ++i) delta.emplace_back(i, i);
                else
                    delta = parse_delta(sum_args.delta);
                built = pyra::sum_construction(center, design_o, z, design_z, delta);
            }
            auto vrep = pyra::validate_symmetric_design(*built);
            pyra::save_design(*built, sum_args.out);
            rep.checks.add("construct-sum", vrep.ok(), params_text(vrep) + " written to " + sum_args.out);
        };
    });

    // ------------------------------------------------------- sum (alias)
    struct {
        std::string witness, out;
    } tsum_args;
    auto* tsum = app.add_subcommand("sum", "assemble a design from a decomposition witness");
    tsum->add_option("--witness", tsum_args.witness, "decomposition witness file")->required();
    tsum->add_option("--out", tsum_args.out, "output design file")->required();
    tsum->callback([&] {
        task = [&](pyra::RunReport& rep) {
            rep.inputs[tsum_args.witness] = file_digest(tsum_args.witness);
            Design built = pyra::sum_construction(pyra::load_witness(tsum_args.witness));
            auto vrep = pyra::validate_symmetric_design(built);
            pyra::save_design(built, tsum_args.out);
            rep.checks.add("sum-construction", vrep.ok(),
                           params_text(vrep) + " written to " + tsum_args.out);
        };
    });

    // --------------------------------------------------------------- verify
    struct {
        std::string design;
    } verify_args;
    auto* verify = app.add_subcommand("verify", "check that a design file holds a symmetric design");
    verify->add_option("design", verify_args.design, "design file")->required();
    verify->callback([&] {
        task = [&](pyra::RunReport& rep) {
            Design d = load_input(rep, verify_args.design);
            auto vrep = pyra::validate_symmetric_design(d);
            std::vector<std::string> errs(vrep.errors.begin(),
                                          vrep.errors.begin() + std::min<std::size_t>(vrep.errors.size(), 3));
            rep.checks.add("symmetric-design", vrep.ok(),
                           vrep.ok() ? params_text(vrep) : join(errs, "; "));
        };
    });

    // -------------------------------------------------------------- analyze
    struct {
        std::string design;
        bool pg_criterion = false, centers = false, points = false, lines = false;
    } an_args;
    auto* analyze = app.add_subcommand("analyze", "structural analysis of a design");
    analyze->add_option("design", an_args.design, "design file")->required();
    analyze->add_flag("--pg-criterion", an_args.pg_criterion, "evaluate the PG point criterion");
    analyze->add_flag("--center-blocks", an_args.centers, "list the center blocks");
    analyze->add_flag("--center-points", an_args.points, "list the center points");
    analyze->add_flag("--lines", an_args.lines, "count the design lines");
    analyze->callback([&] {
        task = [&](pyra::RunReport& rep) {
            Design d = load_input(rep, an_args.design);
            bool all = !(an_args.pg_criterion || an_args.centers || an_args.points || an_args.lines);
            auto vrep = pyra::validate_symmetric_design(d);
            rep.checks.add("parameters", vrep.ok(),
                           vrep.ok() ? params_text(vrep) : "not a symmetric design");
            if (all || an_args.pg_criterion) {
                try {
                    bool pg = pyra::satisfies_pg_criterion(d);
                    rep.checks.add("pg-criterion", true, pg ? "satisfied" : "not satisfied");
                } catch (const std::domain_error& e) {
                    rep.checks.add("pg-criterion", false, e.what());
                }
            }
            if (all || an_args.centers) {
                auto centers = pyra::center_blocks(d);
                std::vector<std::string> idx;
                for (int i : centers) idx.push_back(std::to_string(i));
                rep.checks.add("center-blocks", true,
                               std::to_string(centers.size()) + " center blocks" +
                                   (idx.empty() ? "" : ": " + join(idx, ",")));
            }
            if (all || an_args.points) {
                std::vector<std::string> pts;
                for (int p = 0; p < d.v(); ++p)
                    if (pyra::is_center_point(d, p)) pts.push_back(std::to_string(p));
                rep.checks.add("center-points", true,
                               std::to_string(pts.size()) + " center points" +
                                   (pts.empty() ? "" : ": " + join(pts, ",")));
            }
            if (all || an_args.lines) {
                int count = 0;
                for (int p = 0; p < d.v(); ++p)
                    for (int q = p + 1; q < d.v(); ++q)
                        if (auto line = pyra::design_line(d, p, q); line && line->t > q) ++count;
                rep.checks.add("lines", true, std::to_string(count) + " design lines");
            }
        };
    });

    // ------------------------------------------------------------ decompose
    struct {
        std::string design, z, out;
        int block = -1;
    } dec_args;
    auto* decompose_cmd = app.add_subcommand("decompose", "split a design over one of its center blocks");
    decompose_cmd->add_option("design", dec_args.design, "design file")->required();
    decompose_cmd->add_option("--block", dec_args.block, "index of the center block")->required();
    decompose_cmd->add_option("--z", dec_args.z, "Z points (default: center block minus its largest point)");
    decompose_cmd->add_option("--out", dec_args.out, "output witness file")->required();
    decompose_cmd->callback([&] {
        task = [&](pyra::RunReport& rep) {
            Design d = load_input(rep, dec_args.design);
            const Block& center = d.block(dec_args.block);
            Block z = dec_args.z.empty()
                          ? Block(d.v(), center.mask() & ~(std::uint64_t{1} << center.max_point()))
                          : Block::from_points(d.v(), parse_points(dec_args.z));
            try {
                auto w = pyra::decompose(d, dec_args.block, z);
                pyra::save_witness(w, dec_args.out);
                rep.checks.add("decomposition", true,
                               "components on " + std::to_string(w.design_o.v()) +
                                   " points, excluded point " + std::to_string(w.p_prime) + ", written to " +
                                   dec_args.out);
            } catch (const std::domain_error& e) {
                rep.checks.add("decomposition", false, e.what());
            }
        };
    });

    // ----------------------------------------------------------- delta-search
    struct {
        std::string design_o, design_z, center, z, keep = "all", out;
        std::size_t exhaustive_limit = 40320, samples = 0;
        std::uint64_t seed = 1;
    } ds_args;
    auto* dsearch = app.add_subcommand("delta-search", "sweep block bijections between two components");
    dsearch->add_option("--design-o", ds_args.design_o, "outside component design file")->required();
    dsearch->add_option("--design-z", ds_args.design_z, "center-side component design file")->required();
    dsearch->add_option("--center", ds_args.center, "center block points, comma separated")->required();
    dsearch->add_option("--z", ds_args.z, "Z points, comma separated")->required();
    dsearch->add_option("--keep", ds_args.keep, "which sums to keep: all, pg, or non-pg")
        ->check(CLI::IsMember({"all", "pg", "non-pg"}));
    dsearch->add_option("--exhaustive-limit", ds_args.exhaustive_limit,
                        "largest bijection count swept exhaustively");
    dsearch->add_option("--samples", ds_args.samples, "sample size beyond the exhaustive range");
    dsearch->add_option("--seed", ds_args.seed, "sampling seed");
    dsearch->add_option("--out", ds_args.out, "output file for the kept bijections");
    dsearch->callback([&] {
        task = [&](pyra::RunReport& rep) {
            Design design_o = load_input(rep, ds_args.design_o);
            Design design_z = load_input(rep, ds_args.design_z);
            auto center_pts = parse_points(ds_args.center);
            int v = 2 * static_cast<int>(center_pts.size()) - 1;
            Block center = Block::from_points(v, center_pts);
            Block z = Block::from_points(v, parse_points(ds_args.z));
            std::function<bool(const Design&)> predicate = [](const Design&) { return true; };
            if (ds_args.keep == "pg")
                predicate = [](const Design& d) { return pyra::satisfies_pg_criterion(d); };
            if (ds_args.keep == "non-pg")
                predicate = [](const Design& d) { return !pyra::satisfies_pg_criterion(d); };
            pyra::DeltaSearchOptions opt;
            opt.exhaustive_limit = ds_args.exhaustive_limit;
            opt.samples = ds_args.samples;
            opt.seed = ds_args.seed;
            auto kept = pyra::delta_search(design_o, design_z, center, z, predicate, opt);
            rep.checks.add("delta-search", true,
                           std::to_string(kept.size()) + " bijections kept (filter: " + ds_args.keep + ")");
            if (!ds_args.out.empty()) {
                ordered_json deltas = ordered_json::array();
                for (const auto& dm : kept) {
                    ordered_json pairs = ordered_json::array();
                    for (const auto& [i, j] : dm) pairs.push_back(ordered_json::array({i, j}));
                    deltas.push_back(std::move(pairs));
                }
                write_text(ds_args.out,
                           ordered_json{{"count", kept.size()}, {"deltas", std::move(deltas)}}.dump(2));
            }
        };
    });

    // --------------------------------------------------------------- search
    auto* search = app.add_subcommand("search", "enumerative searches");
    search->require_subcommand(1);
    struct {
        int n = 7, m = 2, size = 7;
        std::size_t vertex_budget = 10'000;
        std::string out;
    } cl_args;
    auto* cliques_cmd = search->add_subcommand("cliques", "cliques in the collinearity graph of 2m-subsets");
    cliques_cmd->add_option("--n", cl_args.n, "ambient set size")->required();
    cliques_cmd->add_option("--m", cl_args.m, "half the subset size")->required();
    cliques_cmd->add_option("--size", cl_args.size, "clique size to enumerate")->required();
    cliques_cmd->add_option("--budget", cl_args.vertex_budget, "refuse larger vertex sets");
    cliques_cmd->add_option("--out", cl_args.out, "output file for the cliques");
    cliques_cmd->callback([&] {
        task = [&](pyra::RunReport& rep) {
            pyra::CliqueSearchOptions opt;
            opt.vertex_budget = cl_args.vertex_budget;
            auto cliques = pyra::enumerate_cliques(pyra::GeometryParams(cl_args.n, cl_args.m), cl_args.size, opt);
            rep.checks.add("clique-search", true,
                           std::to_string(cliques.size()) + " cliques of size " + std::to_string(cl_args.size));
            if (!cl_args.out.empty()) {
                ordered_json arr = ordered_json::array();
                for (const auto& d : cliques) arr.push_back(design_value(d));
                write_text(cl_args.out,
                           ordered_json{{"count", cliques.size()}, {"cliques", std::move(arr)}}.dump(2));
            }
        };
    });

    // ---------------------------------------------------------------- group
    auto* group = app.add_subcommand("group", "pyramidal automorphism groups");
    group->require_subcommand(1);

    struct {
        std::string design, out;
        int block = -1;
    } gb_args;
    auto* gbuild = group->add_subcommand("build", "construct the group over a center block");
    gbuild->add_option("design", gb_args.design, "design file")->required();
    gbuild->add_option("--block", gb_args.block, "index of the center block")->required();
    gbuild->add_option("--out", gb_args.out, "output certificate file");
    gbuild->callback([&] {
        task = [&](pyra::RunReport& rep) {
            Design d = load_input(rep, gb_args.design);
            try {
                auto cert = pyra::build_group(d, gb_args.block);
                std::string detail = "group of order " + std::to_string(cert.elements.size()) +
                                     " fixing " + std::to_string(cert.fixed_set.size()) + " points";
                if (!gb_args.out.empty()) {
                    pyra::save_certificate(cert, gb_args.out);
                    detail += ", written to " + gb_args.out;
                }
                rep.checks.add("construction", true, detail);
            } catch (const std::domain_error& e) {
                rep.checks.add("construction", false, e.what());
            }
        };
    });

    struct {
        std::string design, cert;
        bool classification = false;
    } gv_args;
    auto* gverify = group->add_subcommand("verify", "re-check a certificate against a design");
    gverify->add_option("design", gv_args.design, "design file")->required();
    gverify->add_option("certificate", gv_args.cert, "certificate file")->required();
    gverify->add_flag("--classification", gv_args.classification, "also re-check the full classification");
    gverify->callback([&] {
        task = [&](pyra::RunReport& rep) {
            Design d = load_input(rep, gv_args.design);
            rep.inputs[gv_args.cert] = file_digest(gv_args.cert);
            auto cert = pyra::load_certificate(gv_args.cert);
            merge_report(rep, "certificate", pyra::verify_certificate(d, cert));
            merge_report(rep, "action", pyra::verify_center_block_action(d, cert));
            if (gv_args.classification)
                merge_report(rep, "classification", pyra::verify_pyramidal_classification(d, cert));
        };
    });

    // ------------------------------------------------------------ stabilizer
    struct {
        std::string design, fix, out;
        int block = -1;
        bool setwise = false;
        std::uint64_t node_budget = 0;
        double budget_seconds = 0.0;
    } st_args;
    auto* stab_cmd = app.add_subcommand("stabilizer", "automorphisms fixing a point set");
    stab_cmd->add_option("design", st_args.design, "design file")->required();
    stab_cmd->add_option("--fixed", st_args.fix, "points fixed pointwise, comma separated");
    stab_cmd->add_option("--block", st_args.block, "fix the complement of this block pointwise");
    stab_cmd->add_flag("--setwise", st_args.setwise, "stabilize the given block as a set instead");
    stab_cmd->add_option("--node-budget", st_args.node_budget, "abort after this many search nodes");
    stab_cmd->add_option("--budget-seconds", st_args.budget_seconds, "abort after this much time");
    stab_cmd->add_option("--out", st_args.out, "output group file");
    stab_cmd->callback([&] {
        task = [&](pyra::RunReport& rep) {
            Design d = load_input(rep, st_args.design);
            pyra::StabilizerOptions opt;
            opt.node_budget = st_args.node_budget;
            opt.time_budget_seconds = st_args.budget_seconds;
            pyra::StabilizerResult result{{}, false, 0};
            if (st_args.setwise) {
                if (st_args.block < 0) throw CLI::ValidationError("--setwise", "needs --block");
                result = pyra::setwise_stabilizer_search(d, d.block(st_args.block), opt);
            } else if (st_args.block >= 0) {
                result = pyra::stabilizer_search(d, d.block(st_args.block).complement(), opt);
            } else if (!st_args.fix.empty()) {
                result = pyra::stabilizer_search(d, Block::from_points(d.v(), parse_points(st_args.fix)), opt);
            } else {
                throw CLI::ValidationError("stabilizer", "need --fixed or --block");
            }
            rep.checks.add("search-complete", result.complete,
                           std::to_string(result.elements.size()) + " automorphisms, " +
                               std::to_string(result.nodes) + " nodes" +
                               (result.complete ? "" : ", budget hit"));
            if (!st_args.out.empty()) write_text(st_args.out, pyra::group_to_json(d.v(), result.elements));
        };
    });

    // -------------------------------------------------------------- theorem
    auto* theorem = app.add_subcommand("theorem", "classification statements");
    theorem->require_subcommand(1);
    struct {
        std::string design, cert;
        int block = -1;
        std::uint64_t node_budget = 0;
        double budget_seconds = 0.0;
    } th_args;
    auto* tverify = theorem->add_subcommand(
        "verify", "group of the expected order exists over a block iff it is a center block with PG components");
    tverify->add_option("design", th_args.design, "design file")->required();
    tverify->add_option("certificate", th_args.cert, "certificate file (omit to sweep every block)");
    tverify->add_option("--block", th_args.block, "restrict the sweep to one block index");
    tverify->add_option("--node-budget", th_args.node_budget, "per-search node budget");
    tverify->add_option("--budget-seconds", th_args.budget_seconds, "per-search time budget");
    tverify->callback([&] {
        task = [&](pyra::RunReport& rep) {
            Design d = load_input(rep, th_args.design);
            if (!th_args.cert.empty()) {
                rep.inputs[th_args.cert] = file_digest(th_args.cert);
                auto cert = pyra::load_certificate(th_args.cert);
                merge_report(rep, "theorem", pyra::verify_pyramidal_classification(d, cert));
                return;
            }
            pyra::StabilizerOptions opt;
            opt.node_budget = th_args.node_budget;
            opt.time_budget_seconds = th_args.budget_seconds;
            std::size_t positives = 0, failures = 0, incomplete = 0;
            int lo = th_args.block >= 0 ? th_args.block : 0;
            int hi = th_args.block >= 0 ? th_args.block + 1 : d.block_count();
            for (int bi = lo; bi < hi; ++bi) {
                const Block& o = d.block(bi);
                bool expected = pyra::is_center_block(d, bi) && pyra::classify_z_components(d, bi).all_pg;
                auto stab = pyra::stabilizer_search(d, o.complement(), opt);
                if (!stab.complete) {
                    ++incomplete;
                    rep.checks.add("block-" + std::to_string(bi), false, "search budget hit");
                    continue;
                }
                auto subgroups = pyra::sharply_transitive_abelian_subgroups(stab.elements, o);
                bool found = !subgroups.empty();
                bool good = found == expected;
                std::string detail = expected ? "center block with PG components" : "no group expected";
                if (found && good) {
                    ++positives;
                    auto cert = pyra::build_group(d, bi);
                    good = subgroups.size() == 1 && subgroups.front() == cert.elements &&
                           pyra::verify_pyramidal_classification(d, cert).all_passed();
                    detail = "unique group of order " + std::to_string(cert.elements.size()) +
                             (good ? ", matches the construction" : ", MISMATCH");
                }
                if (!good) ++failures;
                if (!good || th_args.block >= 0)
                    rep.checks.add("block-" + std::to_string(bi), good, detail);
            }
            rep.checks.add("classification", failures == 0 && incomplete == 0,
                           std::to_string(hi - lo) + " blocks checked, " + std::to_string(positives) +
                               " groups found, " + std::to_string(failures) + " mismatches, " +
                               std::to_string(incomplete) + " incomplete searches");
        };
    });

    // --------------------------------------------------------------- accept
    struct {
        std::string tier;
    } acc_args;
    auto* accept_cmd = app.add_subcommand("accept", "run the acceptance suite for a rank tier");
    accept_cmd->add_option("tier", acc_args.tier, "one of r3, r4, r5")
        ->required()
        ->check(CLI::IsMember({"r3", "r4", "r5"}));
    accept_cmd->callback([&] {
        task = [&](pyra::RunReport& rep) {
            pyra::accept::Tier tier = acc_args.tier == "r3"   ? pyra::accept::Tier::r3
                                      : acc_args.tier == "r4" ? pyra::accept::Tier::r4
                                                              : pyra::accept::Tier::r5;
            auto suite = pyra::accept::run_tier(tier, std::cout);
            for (const auto& c : suite.criteria) {
                rep.checks.add("criterion-" + std::to_string(c.id) + "-" + c.name, c.passed,
                               join(c.details, "; "));
                rep.timing_seconds[c.name] = c.seconds;
            }
        };
    });

    // -------------------------------------------------------------- catalog
    auto* catalog = app.add_subcommand("catalog", "on-disk store of constructed designs");
    catalog->require_subcommand(1);
    struct {
        std::string file, dir, provenance;
        std::vector<std::string> tags;
    } ca_args;
    auto* cadd = catalog->add_subcommand("add", "insert a design file into the catalog");
    cadd->add_option("design", ca_args.file, "design file")->required();
    cadd->add_option("--dir", ca_args.dir, "catalog directory")->required();
    cadd->add_option("--tag", ca_args.tags, "tags to attach (repeatable)");
    cadd->add_option("--provenance", ca_args.provenance, "producing command (default: this command line)");
    struct {
        std::string dir;
    } cl_list;
    auto* clist = catalog->add_subcommand("list", "print the catalog index");
    clist->add_option("--dir", cl_list.dir, "catalog directory")->required();

    std::string command_line;
    for (int i = 0; i < argc; ++i) {
        if (i) command_line += ' ';
        command_line += argv[i];
    }
    cadd->callback([&] {
        task = [&](pyra::RunReport& rep) {
            Design d = load_input(rep, ca_args.file);
            pyra::Catalog cat(ca_args.dir);
            auto entry = cat.add(d, ca_args.tags,
                                 ca_args.provenance.empty() ? command_line : ca_args.provenance);
            rep.checks.add("catalog-add", true, "id " + entry.id + " -> " + entry.file);
        };
    });
    clist->callback([&] {
        task = [&](pyra::RunReport& rep) {
            pyra::Catalog cat(cl_list.dir);
            auto entries = cat.entries();
            for (const auto& e : entries)
                std::cout << e.id << "  (" << e.parameters.v << "," << e.parameters.k << ","
                          << e.parameters.lambda << ")  [" << join(e.tags, ",") << "]  " << e.provenance
                          << "\n";
            rep.checks.add("catalog-list", true, std::to_string(entries.size()) + " entries");
        };
    });

    CLI11_PARSE(app, argc, argv);

    pyra::RunReport rep;
    rep.command = command_line;
    auto t0 = std::chrono::steady_clock::now();
    int exit_code = 0;
    try {
        task(rep);
        exit_code = rep.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rep.checks.add("run", false, e.what());
        exit_code = 2;
    }
    rep.timing_seconds["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const auto& c : rep.checks.checks)
        std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : " — " + c.detail)
                  << "\n";

    if (!report_path.empty()) {
        try {
            write_text(report_path, rep.to_json());
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            exit_code = 2;
        }
    }
    return exit_code;
}
