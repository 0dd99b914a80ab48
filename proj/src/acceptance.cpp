#include "pyra/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "pyra/analysis.hpp"
#include "pyra/decomposition.hpp"
#include "pyra/design.hpp"
#include "pyra/geometry.hpp"
#include "pyra/pyramidal.hpp"

namespace pyra::accept {
namespace {

struct Scope {
    bool r4 = false;
    bool r5 = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", s);
    return buf;
}

template <typename Body>
CriterionResult timed(int id, const char* name, Body&& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.passed = body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.details.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = seconds_since(t0);
    return r;
}

void apply_time_pin(CriterionResult& r, double limit_seconds) {
    if (r.seconds >= limit_seconds) {
        r.passed = false;
        r.details.push_back("time limit exceeded: " + fmt_seconds(r.seconds) + " s >= " +
                            fmt_seconds(limit_seconds) + " s");
    }
}

CriterionResult skipped(int id, const char* name, const std::string& why) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.passed = true;
    r.details.push_back("skipped: " + why);
    return r;
}

void log_result(std::ostream& log, const CriterionResult& r) {
    std::string name = r.name;
    name.resize(30, ' ');
    log << "[" << r.id << "] " << name << (r.passed ? "PASS" : "FAIL") << "  " << fmt_seconds(r.seconds)
        << " s\n";
    for (const auto& line : r.details) log << "      " << line << "\n";
    log.flush();
}

Block range_block(int v, int lo, int hi) {
    Block b(v);
    for (int p = lo; p <= hi; ++p) b = b | Block(v, std::uint64_t{1} << p);
    return b;
}

Block drop_point(const Block& b, int p) { return Block(b.v(), b.mask() & ~(std::uint64_t{1} << p)); }

// ---------------------------------------------------------------- corpus

struct BaseCorpus {
    Design pg3, pg4, pg5, pg6;
    std::vector<Design> cliques;  // the size-7 cliques of the (n=7, m=2) geometry
};

const BaseCorpus& base_corpus() {
    static const BaseCorpus c{pg_hyperplane_complement_design(3), pg_hyperplane_complement_design(4),
                              pg_hyperplane_complement_design(5), pg_hyperplane_complement_design(6),
                              enumerate_cliques(GeometryParams(7, 2), 7)};
    return c;
}

// All sums over a fixed frame at v = 15: both components are the rank-3
// construction and delta runs over every bijection of their block lists.
struct SumFamily {
    Block center, z;
    Design design_o, design_z;
    std::vector<DeltaMap> deltas;
    std::vector<Design> sums;
    std::vector<std::size_t> pg_idx, non_pg_idx;
};

const SumFamily& r4_family() {
    static const SumFamily f = [] {
        const BaseCorpus& b = base_corpus();
        Block center = range_block(15, 7, 14);
        Block z = range_block(15, 7, 13);
        SumFamily fam{center, z, b.pg3, b.pg3, {}, {}, {}, {}};
        fam.deltas = delta_search(fam.design_o, fam.design_z, center, z,
                                  [](const Design&) { return true; });
        fam.sums.reserve(fam.deltas.size());
        for (const auto& dm : fam.deltas) {
            fam.sums.push_back(sum_construction(center, fam.design_o, z, fam.design_z, dm));
            if (satisfies_pg_criterion(fam.sums.back()))
                fam.pg_idx.push_back(fam.sums.size() - 1);
            else
                fam.non_pg_idx.push_back(fam.sums.size() - 1);
        }
        return fam;
    }();
    return f;
}

struct R5Family {
    Block center, z;
    std::vector<Design> sums;
};

const R5Family& r5_family() {
    static const R5Family f = [] {
        const BaseCorpus& b = base_corpus();
        Block center = range_block(31, 15, 30);
        Block z = range_block(31, 15, 29);
        int nb = b.pg4.block_count();
        DeltaMap ident, swapped, reversed;
        for (int i = 0; i < nb; ++i) {
            ident.emplace_back(i, i);
            swapped.emplace_back(i, i == 0 ? 1 : (i == 1 ? 0 : i));
            reversed.emplace_back(i, nb - 1 - i);
        }
        std::vector<Design> sums;
        for (const auto& dm : {ident, swapped, reversed})
            sums.push_back(sum_construction(center, b.pg4, z, b.pg4, dm));
        return R5Family{center, z, std::move(sums)};
    }();
    return f;
}

bool equal_witness(const DecompositionWitness& a, const DecompositionWitness& b) {
    return a.v == b.v && a.center == b.center && a.z == b.z && a.p_prime == b.p_prime &&
           a.design_o == b.design_o && a.design_z == b.design_z && a.delta == b.delta;
}

std::vector<Permutation> closed_group_from_z(const Design& d, const Block& center, const Block& z) {
    std::set<Permutation> s;
    s.insert(Permutation::identity(d.v()));
    for (int p : z.points()) s.insert(point_involution(d, center, z, p));
    std::size_t cap = static_cast<std::size_t>(center.size()) * 2;
    bool grew = true;
    while (grew && s.size() <= cap) {
        grew = false;
        std::vector<Permutation> snap(s.begin(), s.end());
        for (const auto& a : snap)
            for (const auto& b : snap)
                if (s.insert(a.then(b)).second) grew = true;
    }
    return {s.begin(), s.end()};
}

// ------------------------------------------- independent clique oracle
//
// Deliberately naive re-derivation used to check the bitset enumeration:
// subsets as sorted integer vectors, adjacency by merge intersection,
// plain recursion in input order.

std::vector<std::vector<int>> oracle_vertices(int n, int take) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == take) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x < n; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

int oracle_shared(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return static_cast<int>(both.size());
}

std::vector<std::vector<std::size_t>> oracle_cliques(int n, int m, int target) {
    auto verts = oracle_vertices(n, 2 * m);
    std::size_t nv = verts.size();
    std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j)
            if (oracle_shared(verts[i], verts[j]) == m) adj[i][j] = adj[j][i] = true;

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == target) {
            out.push_back(cur);
            return;
        }
        for (std::size_t u = start; u < nv; ++u) {
            bool fits = true;
            for (std::size_t w : cur)
                if (!adj[w][u]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            cur.push_back(u);
            rec(u + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<std::uint64_t> block_masks(const Design& d) {
    std::vector<std::uint64_t> out;
    for (const auto& b : d.blocks()) out.push_back(b.mask());
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- criteria

CriterionResult criterion_pg_constructor() {
    auto r = timed(1, "pg-constructor", [&](CriterionResult& res) {
        bool ok = true;
        for (int rank = 3; rank <= 6; ++rank) {
            Design d = pg_hyperplane_complement_design(rank);
            auto rep = validate_symmetric_design(d);
            int v = (1 << rank) - 1;
            bool good = rep.ok() && rep.v == v && rep.block_size == (1 << (rank - 1)) &&
                        rep.lambda == (1 << (rank - 2));
            res.details.push_back("rank " + std::to_string(rank) + ": (" + std::to_string(rep.v) + "," +
                                  std::to_string(rep.block_size) + "," + std::to_string(rep.lambda) + ") " +
                                  (good ? "valid" : "INVALID"));
            if (!good)
                for (const auto& e : rep.errors) res.details.push_back("  " + e);
            ok = ok && good;
        }
        return ok;
    });
    apply_time_pin(r, 1.0);
    return r;
}

CriterionResult criterion_pg_equivalence(const Scope& scope) {
    return timed(2, "pg-criterion-equivalence", [&](CriterionResult& res) {
        const BaseCorpus& b = base_corpus();
        std::size_t checked = 0, criterion_true = 0, disagreements = 0;
        auto check = [&](const Design& d, const Design& reference, const std::string& label) {
            bool crit = satisfies_pg_criterion(d);
            bool iso = is_isomorphic(d, reference).has_value();
            ++checked;
            if (crit) ++criterion_true;
            if (crit != iso) {
                ++disagreements;
                if (disagreements <= 5)
                    res.details.push_back("disagreement at " + label + ": criterion " +
                                          (crit ? "true" : "false") + ", isomorphism " +
                                          (iso ? "found" : "absent"));
            }
        };

        for (std::size_t i = 0; i < b.cliques.size(); ++i)
            check(b.cliques[i], b.pg3, "clique #" + std::to_string(i));
        res.details.push_back(std::to_string(b.cliques.size()) + " rank-3 cliques checked");

        if (scope.r4) {
            check(b.pg4, b.pg4, "rank-4 construction");
            const SumFamily& f = r4_family();
            for (std::size_t i = 0; i < f.sums.size(); ++i)
                check(f.sums[i], b.pg4, "rank-4 sum #" + std::to_string(i));
            res.details.push_back(std::to_string(f.sums.size()) + " rank-4 sums checked: " +
                                  std::to_string(f.pg_idx.size()) + " meet the criterion, " +
                                  std::to_string(f.non_pg_idx.size()) + " do not");
        }
        if (scope.r5) {
            const R5Family& f = r5_family();
            std::size_t pg_count = 0;
            for (std::size_t i = 0; i < f.sums.size(); ++i) {
                if (satisfies_pg_criterion(f.sums[i])) ++pg_count;
                check(f.sums[i], b.pg5, "rank-5 sum #" + std::to_string(i));
            }
            res.details.push_back(std::to_string(f.sums.size()) + " rank-5 sums checked (" +
                                  std::to_string(pg_count) + " meet the criterion)");
        }
        res.details.push_back(std::to_string(checked) + " designs total, " +
                              std::to_string(disagreements) + " disagreements");
        return disagreements == 0 && checked > 0;
    });
}

CriterionResult criterion_cliques() {
    auto r = timed(3, "clique-enumeration", [&](CriterionResult& res) {
        bool ok = true;
        auto cliques = enumerate_cliques(GeometryParams(7, 2), 7);
        res.details.push_back(std::to_string(cliques.size()) + " cliques of size 7 found");
        if (cliques.size() != 30) ok = false;

        std::uint64_t fact7 = 5040;
        if (fact7 / 168 != 30) {
            ok = false;
            res.details.push_back("analytic cross-check 7!/168 failed");
        }

        auto naive = oracle_cliques(7, 2, 7);
        if (naive.size() != 30) {
            ok = false;
            res.details.push_back("naive oracle found " + std::to_string(naive.size()) + " cliques");
        }
        auto naive_verts = oracle_vertices(7, 4);
        std::set<std::vector<std::uint64_t>> naive_set;
        for (const auto& cl : naive) {
            std::vector<std::uint64_t> masks;
            for (std::size_t u : cl) {
                std::uint64_t mk = 0;
                for (int p : naive_verts[u]) mk |= std::uint64_t{1} << p;
                masks.push_back(mk);
            }
            std::sort(masks.begin(), masks.end());
            naive_set.insert(std::move(masks));
        }
        std::set<std::vector<std::uint64_t>> fast_set;
        for (const auto& d : cliques) fast_set.insert(block_masks(d));
        if (naive_set != fast_set) {
            ok = false;
            res.details.push_back("oracle clique set differs from the enumeration");
        } else {
            res.details.push_back("naive oracle agrees on all 30 cliques");
        }

        for (std::size_t i = 0; i < cliques.size(); ++i) {
            auto rep = validate_symmetric_design(cliques[i]);
            bool valid = rep.ok() && rep.v == 7 && rep.block_size == 4 && rep.lambda == 2;
            bool singular = is_singular_subspace(cliques[i].blocks(), 2);
            if (!valid || !singular) {
                ok = false;
                res.details.push_back("clique #" + std::to_string(i) + (valid ? "" : " fails validation") +
                                      (singular ? "" : " is not a singular subspace"));
            }
        }

        auto eight = enumerate_cliques(GeometryParams(7, 2), 8);
        auto naive_eight = oracle_cliques(7, 2, 8);
        if (!eight.empty() || !naive_eight.empty()) {
            ok = false;
            res.details.push_back("a clique of size 8 exists; the point bound is violated");
        } else {
            res.details.push_back("no clique of size 8 (point bound holds)");
        }

        bool has_pg3 = false;
        for (const auto& d : cliques)
            if (d == base_corpus().pg3) has_pg3 = true;
        if (!has_pg3) {
            ok = false;
            res.details.push_back("the rank-3 construction is missing from the clique list");
        } else {
            res.details.push_back("rank-3 construction appears among the cliques");
        }
        return ok;
    });
    apply_time_pin(r, 5.0);
    return r;
}

CriterionResult criterion_round_trip(const Scope& scope) {
    return timed(4, "decomposition-round-trip", [&](CriterionResult& res) {
        std::size_t designs = 0, trips = 0, failures = 0;
        auto run = [&](const Design& d, const std::string& label) {
            ++designs;
            for (int ci : center_blocks(d)) {
                const Block& center = d.block(ci);
                std::optional<DecompositionWitness> w0;
                for (int p : center.points()) {
                    Block z = drop_point(center, p);
                    auto w = decompose(d, ci, z);
                    ++trips;
                    if (!(sum_construction(w) == d)) {
                        ++failures;
                        if (failures <= 5)
                            res.details.push_back("round trip failed at " + label + ", block " +
                                                  std::to_string(ci) + ", excluded point " + std::to_string(p));
                        continue;
                    }
                    if (!w0) {
                        w0 = w;
                    } else if (!equal_witness(transfer_delta(*w0, z), w)) {
                        ++failures;
                        if (failures <= 5)
                            res.details.push_back("transfer mismatch at " + label + ", block " +
                                                  std::to_string(ci) + ", excluded point " + std::to_string(p));
                    }
                }
            }
        };

        const BaseCorpus& b = base_corpus();
        run(b.pg3, "rank-3 construction");
        for (std::size_t i = 0; i < b.cliques.size(); ++i) run(b.cliques[i], "clique #" + std::to_string(i));
        if (scope.r4) {
            run(b.pg4, "rank-4 construction");
            const SumFamily& f = r4_family();
            for (std::size_t i = 0; i < f.sums.size(); ++i) run(f.sums[i], "rank-4 sum #" + std::to_string(i));
        }
        if (scope.r5) {
            run(b.pg5, "rank-5 construction");
            const R5Family& f = r5_family();
            for (std::size_t i = 0; i < f.sums.size(); ++i) run(f.sums[i], "rank-5 sum #" + std::to_string(i));
        }
        res.details.push_back(std::to_string(designs) + " designs, " + std::to_string(trips) +
                              " decompositions, " + std::to_string(failures) + " failures");
        return failures == 0 && trips > 0;
    });
}

CriterionResult criterion_group_construction(const Scope& scope) {
    auto r = timed(5, "group-construction", [&](CriterionResult& res) {
        const BaseCorpus& b = base_corpus();
        bool ok = true;
        auto run = [&](const Design& d, int center_index, const std::string& label) {
            const Block& center = d.block(center_index);
            auto cert = build_group(d, center_index);

            auto vrep = verify_certificate(d, cert);
            auto arep = verify_center_block_action(d, cert);
            auto chain = extract_involution_chain(d, cert);
            int expected_gens = std::countr_zero(static_cast<unsigned>(center.size()));

            Block z1 = drop_point(center, center.max_point());
            Block z2 = drop_point(center, center.min_point());
            auto g1 = closed_group_from_z(d, center, z1);
            auto g2 = closed_group_from_z(d, center, z2);
            bool z_independent = g1 == g2 && g1 == cert.elements;

            bool good = vrep.all_passed() && arep.all_passed() &&
                        static_cast<int>(chain.generators.size()) == expected_gens && z_independent;
            res.details.push_back(label + ": order " + std::to_string(cert.elements.size()) + ", chain of " +
                                  std::to_string(chain.generators.size()) + " involutions" +
                                  (z_independent ? ", Z-independent" : ", DEPENDS ON Z") +
                                  (good ? "" : " FAILED"));
            if (!vrep.all_passed())
                for (const auto& c : vrep.checks)
                    if (!c.passed) res.details.push_back("  certificate check " + c.name + ": " + c.detail);
            if (!arep.all_passed())
                for (const auto& c : arep.checks)
                    if (!c.passed) res.details.push_back("  action check " + c.name + ": " + c.detail);
            ok = ok && good;
        };

        run(b.pg3, center_blocks(b.pg3).front(), "rank-3 construction");
        if (scope.r4) run(b.pg4, center_blocks(b.pg4).front(), "rank-4 construction");
        if (scope.r5) {
            run(b.pg5, center_blocks(b.pg5).front(), "rank-5 construction");
            const R5Family& f = r5_family();
            for (std::size_t i = 0; i < f.sums.size(); ++i) {
                int ci = *f.sums[i].index_of(f.center);
                run(f.sums[i], ci, "rank-5 sum #" + std::to_string(i));
            }
        }
        return ok;
    });
    apply_time_pin(r, 60.0);
    return r;
}

CriterionResult criterion_classification(const Scope& scope) {
    auto r = timed(6, "classification-exhaustive", [&](CriterionResult& res) {
        std::size_t searches = 0, positives = 0, failures = 0;
        std::uint64_t max_nodes = 0;
        auto run = [&](const Design& d, const std::string& label) {
            for (int bi = 0; bi < d.block_count(); ++bi) {
                const Block& o = d.block(bi);
                bool expected = is_center_block(d, bi) && classify_z_components(d, bi).all_pg;

                auto stab = stabilizer_search(d, o.complement());
                ++searches;
                max_nodes = std::max(max_nodes, stab.nodes);
                if (!stab.complete) {
                    ++failures;
                    res.details.push_back("search incomplete at " + label + ", block " + std::to_string(bi));
                    continue;
                }
                auto subgroups = sharply_transitive_abelian_subgroups(stab.elements, o);
                bool found = !subgroups.empty();
                if (found != expected) {
                    ++failures;
                    if (failures <= 5)
                        res.details.push_back("mismatch at " + label + ", block " + std::to_string(bi) +
                                              ": expected " + (expected ? "a group" : "none") + ", found " +
                                              std::to_string(subgroups.size()));
                    continue;
                }
                if (!found) continue;
                ++positives;
                if (subgroups.size() != 1) {
                    ++failures;
                    if (failures <= 5)
                        res.details.push_back("non-unique group at " + label + ", block " + std::to_string(bi) +
                                              ": " + std::to_string(subgroups.size()) + " candidates");
                    continue;
                }
                auto cert = build_group(d, bi);
                if (!(subgroups.front() == cert.elements)) {
                    ++failures;
                    if (failures <= 5)
                        res.details.push_back("group differs from the construction at " + label + ", block " +
                                              std::to_string(bi));
                }
            }
        };

        const BaseCorpus& b = base_corpus();
        for (std::size_t i = 0; i < b.cliques.size(); ++i) run(b.cliques[i], "clique #" + std::to_string(i));
        if (scope.r4) {
            const SumFamily& f = r4_family();
            bool pg4_present = false;
            for (const auto& s : f.sums)
                if (s == b.pg4) pg4_present = true;
            res.details.push_back(std::string("rank-4 construction ") +
                                  (pg4_present ? "appears among the sums" : "checked separately"));
            if (!pg4_present) run(b.pg4, "rank-4 construction");
            for (std::size_t i = 0; i < f.sums.size(); ++i) run(f.sums[i], "rank-4 sum #" + std::to_string(i));
        }
        res.details.push_back(std::to_string(searches) + " stabilizer searches, " + std::to_string(positives) +
                              " positive cases, max " + std::to_string(max_nodes) + " nodes, " +
                              std::to_string(failures) + " failures");
        return failures == 0 && searches > 0 && positives > 0;
    });
    apply_time_pin(r, 300.0);
    return r;
}

CriterionResult criterion_negative_path() {
    return timed(7, "negative-path-r5", [&](CriterionResult& res) {
        const BaseCorpus& b = base_corpus();
        const SumFamily& f = r4_family();
        if (f.non_pg_idx.empty()) {
            res.details.push_back("no rank-4 sum fails the criterion in the searched space (" +
                                  std::to_string(f.sums.size()) + " bijections over the fixed frame)");
            res.details.push_back("vacuously satisfied");
            return true;
        }
        const Design& specimen = f.sums[f.non_pg_idx.front()];
        res.details.push_back("specimen: rank-4 sum #" + std::to_string(f.non_pg_idx.front()) +
                              " (fails the point criterion)");

        Block center = range_block(31, 15, 30);
        Block z = range_block(31, 15, 29);
        DeltaMap ident;
        for (int i = 0; i < specimen.block_count(); ++i) ident.emplace_back(i, i);
        Design d = sum_construction(center, b.pg4, z, specimen, ident);
        int ci = *d.index_of(center);

        bool all_pg = classify_z_components(d, ci).all_pg;
        res.details.push_back(std::string("inner verdict on the lifted design: ") +
                              (all_pg ? "all components PG (unexpected)" : "components fail the PG criterion"));

        bool refused = false;
        try {
            build_group(d, ci);
        } catch (const std::domain_error&) {
            refused = true;
        }
        res.details.push_back(refused ? "construction refused as required"
                                      : "construction unexpectedly succeeded");

        StabilizerOptions opt;
        opt.node_budget = 50'000'000;
        opt.time_budget_seconds = 120.0;
        auto stab = stabilizer_search(d, center.complement(), opt);
        auto subgroups = sharply_transitive_abelian_subgroups(stab.elements, center);
        res.details.push_back("stabilizer search: " + std::to_string(stab.elements.size()) + " elements, " +
                              std::to_string(stab.nodes) + " nodes, " +
                              (stab.complete ? "complete" : "budget hit (50000000 nodes / 120 s declared)"));
        res.details.push_back(std::to_string(subgroups.size()) +
                              " sharply transitive abelian subgroups on the moved set");
        return !all_pg && refused && subgroups.empty();
    });
}

CriterionResult criterion_normality(const Scope& scope) {
    return timed(8, "normality", [&](CriterionResult& res) {
        std::size_t checked = 0, failures = 0;
        auto run = [&](const Design& d, const std::string& label) {
            for (int ci : center_blocks(d)) {
                auto rep = check_normality(d, ci);
                ++checked;
                if (!rep.all_passed()) {
                    ++failures;
                    for (const auto& c : rep.checks)
                        if (!c.passed)
                            res.details.push_back("failure at " + label + ", block " + std::to_string(ci) +
                                                  ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
                }
            }
        };

        const BaseCorpus& b = base_corpus();
        run(b.pg3, "rank-3 construction");
        if (scope.r4) {
            run(b.pg4, "rank-4 construction");
            const SumFamily& f = r4_family();
            if (!f.pg_idx.empty())
                run(f.sums[f.pg_idx.front()], "rank-4 sum #" + std::to_string(f.pg_idx.front()));
            if (!f.non_pg_idx.empty())
                run(f.sums[f.non_pg_idx.front()], "rank-4 sum #" + std::to_string(f.non_pg_idx.front()));
        }
        res.details.push_back(std::to_string(checked) + " center blocks conjugated, " +
                              std::to_string(failures) + " failures");
        return failures == 0 && checked > 0;
    });
}

}  // namespace

SuiteResult run_tier(Tier tier, std::ostream& log) {
    Scope scope{tier != Tier::r3, tier == Tier::r5};
    const char* tier_name = tier == Tier::r3 ? "r3" : (tier == Tier::r4 ? "r4" : "r5");
    log << "acceptance tier " << tier_name << "\n";

    SuiteResult suite;
    auto push = [&](CriterionResult r) {
        log_result(log, r);
        suite.criteria.push_back(std::move(r));
    };

    push(criterion_pg_constructor());
    push(criterion_pg_equivalence(scope));
    push(criterion_cliques());
    push(criterion_round_trip(scope));
    push(criterion_group_construction(scope));
    push(criterion_classification(scope));
    if (scope.r5)
        push(criterion_negative_path());
    else
        push(skipped(7, "negative-path-r5", "rank-5 scope; run tier r5"));
    push(criterion_normality(scope));

    log << (suite.all_passed() ? "all criteria passed" : "FAILURES PRESENT") << "\n";
    return suite;
}

SuiteResult run_all(std::ostream& log) { return run_tier(Tier::r5, log); }

}  // namespace pyra::accept
