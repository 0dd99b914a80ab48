#include "pyra/pyramidal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "carrier.hpp"
#include "pyra/analysis.hpp"
#include "pyra/mapsearch.hpp"

namespace pyra {

PyramidalCertificate make_certificate(const Block& fixed_set, std::vector<Permutation> elements) {
    int v = fixed_set.v();
    Block moved = fixed_set.complement();
    int m = moved.size();

    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw invariant_violation("duplicate group element");
    if (static_cast<int>(elements.size()) != m)
        throw invariant_violation("element count " + std::to_string(elements.size()) +
                                  " differs from moved point count " + std::to_string(m));

    std::vector<int> orbit(static_cast<std::size_t>(v) * static_cast<std::size_t>(v), -1);
    for (std::size_t e = 0; e < elements.size(); ++e) {
        const Permutation& g = elements[e];
        if (g.v() != v) throw invariant_violation("element degree differs from ground set");
        for (int p : fixed_set.points())
            if (g(p) != p) throw invariant_violation("element moves fixed point " + std::to_string(p));
        for (int a : moved.points()) {
            int b = g(a);
            if (!moved.contains(b)) throw invariant_violation("element leaves the moved set");
            int& slot = orbit[static_cast<std::size_t>(a) * static_cast<std::size_t>(v) +
                              static_cast<std::size_t>(b)];
            if (slot != -1)
                throw invariant_violation("two elements send " + std::to_string(a) + " to " +
                                          std::to_string(b) + "; the action is not sharply transitive");
            slot = static_cast<int>(e);
        }
    }
    return PyramidalCertificate{fixed_set, std::move(elements), std::move(orbit)};
}

namespace {

// Involution derived from a decomposition witness: swap p with the point
// excluded from Z, swap the two partners of every Z-side design line
// through p, fix everything else.
Permutation involution_from_witness(const Design& d, const DecompositionWitness& w, int p) {
    if (!w.z.contains(p)) throw std::invalid_argument("point is not in Z");
    detail::CarrierMap z_map(w.z);
    int lp = -1;
    for (int i = 0; i < z_map.local_v(); ++i)
        if (z_map.pts[static_cast<std::size_t>(i)] == p) lp = i;

    std::vector<int> images(static_cast<std::size_t>(d.v()));
    for (int i = 0; i < d.v(); ++i) images[static_cast<std::size_t>(i)] = i;
    images[static_cast<std::size_t>(p)] = w.p_prime;
    images[static_cast<std::size_t>(w.p_prime)] = p;

    std::uint64_t paired = 0;
    for (int lq = 0; lq < z_map.local_v(); ++lq) {
        if (lq == lp || ((paired >> lq) & 1)) continue;
        auto line = design_line(w.design_z, lp, lq);
        if (!line) throw std::domain_error("lines through the point do not partition Z");
        int lt = line->t;
        if (lt == lp || ((paired >> lt) & 1))
            throw std::domain_error("lines through the point do not partition Z");
        paired |= (std::uint64_t{1} << lq) | (std::uint64_t{1} << lt);
        int q = z_map.pts[static_cast<std::size_t>(lq)];
        int t = z_map.pts[static_cast<std::size_t>(lt)];
        images[static_cast<std::size_t>(q)] = t;
        images[static_cast<std::size_t>(t)] = q;
    }

    Permutation alpha(std::move(images));
    if (!is_automorphism(d, alpha))
        throw invariant_violation("constructed involution is not an automorphism");
    return alpha;
}

std::vector<Permutation> group_elements_for_z(const Design& d, const DecompositionWitness& w) {
    std::vector<Permutation> elements;
    elements.push_back(Permutation::identity(d.v()));
    for (int p : w.z.points()) elements.push_back(involution_from_witness(d, w, p));

    // The set must already be closed; anything new breaks the expected order.
    std::set<Permutation> closed(elements.begin(), elements.end());
    if (closed.size() != elements.size()) throw invariant_violation("coinciding involutions");
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Permutation> snapshot(closed.begin(), closed.end());
        for (const auto& a : snapshot)
            for (const auto& b : snapshot)
                if (closed.insert(a.then(b)).second) grew = true;
        if (closed.size() > static_cast<std::size_t>(w.center.size()))
            throw invariant_violation("closure exceeds the expected group order");
    }
    return {closed.begin(), closed.end()};
}

}  // namespace

Permutation point_involution(const Design& d, const Block& center, const Block& z, int p) {
    auto idx = d.index_of(center);
    if (!idx) throw std::domain_error("given center set is not a block of the design");
    auto w = decompose(d, *idx, z);
    return involution_from_witness(d, w, p);
}

PyramidalCertificate build_group(const Design& d, int center_index) {
    auto verdict = classify_z_components(d, center_index);
    if (!verdict.all_pg)
        throw std::domain_error("construction refused: Z-side components fail the PG criterion, "
                                "so no such group exists");

    const Block& center = d.block(center_index);
    std::uint64_t cmask = center.mask();
    Block z_default(d.v(), cmask & ~(std::uint64_t{1} << center.max_point()));
    Block z_second(d.v(), cmask & ~(std::uint64_t{1} << center.min_point()));

    auto elements = group_elements_for_z(d, decompose(d, center_index, z_default));
    auto recheck = group_elements_for_z(d, decompose(d, center_index, z_second));
    if (elements != recheck)
        throw invariant_violation("group depends on the choice of Z");

    return make_certificate(center.complement(), std::move(elements));
}

Report verify_certificate(const Design& d, const PyramidalCertificate& cert) {
    Report rep;
    int v = d.v();
    const auto& els = cert.elements;
    Block moved = cert.moved_set();

    bool shape = cert.fixed_set.v() == v && !els.empty();
    for (const auto& g : els)
        if (g.v() != v) shape = false;
    rep.add("element-shape", shape, shape ? std::to_string(els.size()) + " elements on " + std::to_string(v) + " points"
                                          : "degree mismatch or empty element list");
    if (!shape) return rep;

    rep.add("element-count", static_cast<int>(els.size()) == moved.size(),
            std::to_string(els.size()) + " elements for " + std::to_string(moved.size()) + " moved points");

    bool has_id = std::find_if(els.begin(), els.end(), [](const Permutation& g) { return g.is_identity(); }) != els.end();
    rep.add("identity-present", has_id);

    bool distinct = true;
    for (std::size_t i = 0; i + 1 < els.size(); ++i)
        if (els[i] == els[i + 1]) distinct = false;
    rep.add("elements-distinct", distinct);

    {
        bool ok = true;
        std::string witness;
        for (std::size_t e = 0; e < els.size() && ok; ++e)
            for (int p : cert.fixed_set.points())
                if (els[e](p) != p) {
                    ok = false;
                    witness = "element " + std::to_string(e) + " moves fixed point " + std::to_string(p);
                    break;
                }
        rep.add("fixes-fixed-set", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (std::size_t e = 0; e < els.size() && ok; ++e)
            for (int b = 0; b < d.block_count(); ++b)
                if (!d.has_block(els[e].apply(d.block(b)))) {
                    ok = false;
                    witness = "element " + std::to_string(e) + " maps block " + std::to_string(b) +
                              " outside the design";
                    break;
                }
        rep.add("automorphism", ok, witness);
    }

    auto find_element = [&](const Permutation& g) {
        auto it = std::lower_bound(els.begin(), els.end(), g);
        return it != els.end() && *it == g;
    };

    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < els.size() && ok; ++i)
            for (std::size_t j = 0; j < els.size(); ++j)
                if (!find_element(els[i].then(els[j]))) {
                    ok = false;
                    witness = "product of elements " + std::to_string(i) + " and " + std::to_string(j) +
                              " escapes the set";
                    break;
                }
        rep.add("closure", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < els.size() && ok; ++i)
            for (std::size_t j = i + 1; j < els.size(); ++j)
                if (!(els[i].then(els[j]) == els[j].then(els[i]))) {
                    ok = false;
                    witness = "elements " + std::to_string(i) + " and " + std::to_string(j) + " do not commute";
                    break;
                }
        rep.add("abelian", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < els.size() && ok; ++i)
            if (!find_element(els[i].inverse())) {
                ok = false;
                witness = "inverse of element " + std::to_string(i) + " is missing";
            }
        rep.add("inverses", ok, witness);
    }

    {
        bool ok = static_cast<int>(cert.orbit_witness.size()) == v * v;
        std::string witness = ok ? "" : "orbit table has the wrong shape";
        if (ok) {
            for (int a = 0; a < v && ok; ++a)
                for (int b = 0; b < v; ++b) {
                    int e = cert.orbit_witness[static_cast<std::size_t>(a) * static_cast<std::size_t>(v) +
                                               static_cast<std::size_t>(b)];
                    if (!moved.contains(a) || !moved.contains(b)) {
                        if (e != -1) {
                            ok = false;
                            witness = "orbit table entry off the moved set";
                            break;
                        }
                        continue;
                    }
                    int hits = 0;
                    for (const auto& g : els)
                        if (g(a) == b) ++hits;
                    if (hits != 1) {
                        ok = false;
                        witness = std::to_string(hits) + " elements send " + std::to_string(a) + " to " +
                                  std::to_string(b);
                        break;
                    }
                    if (e < 0 || e >= static_cast<int>(els.size()) || els[static_cast<std::size_t>(e)](a) != b) {
                        ok = false;
                        witness = "orbit table disagrees at (" + std::to_string(a) + "," + std::to_string(b) + ")";
                        break;
                    }
                }
        }
        rep.add("sharp-transitivity", ok, witness);
    }

    return rep;
}

StabilizerResult stabilizer_search(const Design& d, const Block& fixed, const StabilizerOptions& options) {
    if (fixed.v() != d.v()) throw std::invalid_argument("fixed set lives on a different ground set");
    std::uint64_t moved_mask = Block::all_mask(d.v()) & ~fixed.mask();
    std::vector<std::uint64_t> candidates(static_cast<std::size_t>(d.v()));
    for (int p = 0; p < d.v(); ++p)
        candidates[static_cast<std::size_t>(p)] =
            fixed.contains(p) ? (std::uint64_t{1} << p) : moved_mask;

    MapSearchOptions opt;
    opt.node_budget = options.node_budget;
    opt.time_budget_seconds = options.time_budget_seconds;
    auto res = search_block_maps(d, d, candidates, opt);
    return {std::move(res.maps), res.complete, res.nodes};
}

StabilizerResult setwise_stabilizer_search(const Design& d, const Block& setwise,
                                           const StabilizerOptions& options) {
    if (setwise.v() != d.v()) throw std::invalid_argument("set lives on a different ground set");
    std::uint64_t inside = setwise.mask();
    std::uint64_t outside = Block::all_mask(d.v()) & ~inside;
    std::vector<std::uint64_t> candidates(static_cast<std::size_t>(d.v()));
    for (int p = 0; p < d.v(); ++p)
        candidates[static_cast<std::size_t>(p)] = setwise.contains(p) ? inside : outside;

    MapSearchOptions opt;
    opt.node_budget = options.node_budget;
    opt.time_budget_seconds = options.time_budget_seconds;
    auto res = search_block_maps(d, d, candidates, opt);
    return {std::move(res.maps), res.complete, res.nodes};
}

Report verify_center_block_action(const Design& d, const PyramidalCertificate& cert) {
    Report rep;
    Block moved = cert.moved_set();
    auto idx = d.index_of(moved);
    rep.add("moved-set-is-block", idx.has_value(),
            idx ? "block index " + std::to_string(*idx) : "moved set is not a block");
    if (!idx) {
        rep.add("center-block", false, "moved set is not a block");
        rep.add("preserve-or-transpose", false, "moved set is not a block");
        return rep;
    }

    bool center = is_center_block(d, *idx);
    rep.add("center-block", center, center ? "" : "some symmetric difference is not a block");

    bool ok = true;
    std::string witness;
    for (std::size_t e = 0; e < cert.elements.size() && ok; ++e) {
        const auto& g = cert.elements[e];
        for (int b = 0; b < d.block_count(); ++b) {
            if (b == *idx) continue;
            const Block& blk = d.block(b);
            Block partner = moved ^ blk;
            Block gb = g.apply(blk);
            Block gp = g.apply(partner);
            bool fixes = gb == blk && gp == partner;
            bool swaps = gb == partner && gp == blk;
            if (!fixes && !swaps) {
                ok = false;
                witness = "element " + std::to_string(e) + " scatters the pair of block " + std::to_string(b);
                break;
            }
        }
    }
    rep.add("preserve-or-transpose", ok, witness);
    return rep;
}

InvolutionChain extract_involution_chain(const Design& d, const PyramidalCertificate& cert) {
    Block moved = cert.moved_set();
    if (!d.index_of(moved)) throw invariant_violation("moved set is not a block");

    // Complementary trace family: intersections of the other blocks with
    // the moved set. Closed under complement inside the moved set.
    std::vector<Block> traces;
    for (int b = 0; b < d.block_count(); ++b) {
        Block t = d.block(b) & moved;
        if (t == moved) continue;
        if (std::find(traces.begin(), traces.end(), t) == traces.end()) traces.push_back(t);
    }
    std::sort(traces.begin(), traces.end());

    InvolutionChain chain;
    std::vector<Permutation> current = cert.elements;
    std::sort(current.begin(), current.end());
    Block y_current = moved;

    while (y_current.size() > 1) {
        // Split the current trace into two halves some group element swaps.
        Block half_a(d.v());
        if (y_current == moved) {
            half_a = traces.front();
        } else {
            auto pts = y_current.points();
            int p = pts[0], q = pts[1];
            bool found = false;
            for (const auto& t : traces)
                if (t.contains(p) != t.contains(q)) {
                    half_a = y_current & t;
                    found = true;
                    break;
                }
            if (!found) throw invariant_violation("no trace separates two points of the chain set");
        }
        Block half_b = y_current ^ half_a;
        if (half_a.size() * 2 != y_current.size())
            throw invariant_violation("trace split does not halve the chain set");

        std::vector<Permutation> transposers;
        for (const auto& g : current)
            if (g.apply(half_a) == half_b) transposers.push_back(g);
        if (transposers.empty()) throw invariant_violation("no element transposes the trace split");

        Permutation beta = Permutation::identity(d.v());
        bool have_beta = false;
        for (const auto& g : transposers)
            if (g.is_involution()) {
                beta = g;
                have_beta = true;
                break;
            }
        if (!have_beta) {
            // No transposing involution: two transposers share a square,
            // and their quotient is an involution inside the subgroup.
            for (std::size_t i = 0; i < transposers.size() && !have_beta; ++i)
                for (std::size_t j = i + 1; j < transposers.size(); ++j)
                    if (transposers[i].then(transposers[i]) == transposers[j].then(transposers[j])) {
                        beta = transposers[i].then(transposers[j].inverse());
                        have_beta = true;
                        break;
                    }
            if (!have_beta || !beta.is_involution())
                throw invariant_violation("no involution among or derived from the transposers");
        }

        // The trace pair this involution actually transposes refines the chain.
        Block y_next(d.v());
        bool found_pair = false;
        for (const auto& t : traces)
            if (beta.apply(t) == (moved ^ t)) {
                y_next = y_current & t;
                found_pair = true;
                break;
            }
        if (!found_pair) throw invariant_violation("involution transposes no complementary trace pair");
        if (y_next.empty() || y_next.size() * 2 != y_current.size())
            throw invariant_violation("transposed trace does not halve the chain set");

        std::vector<Permutation> preservers;
        for (const auto& g : current)
            if (g.apply(y_next) == y_next) preservers.push_back(g);
        if (preservers.size() * 2 != current.size())
            throw invariant_violation("preserver subgroup does not have index two");

        // current must be regenerated by the preservers and beta
        std::vector<Permutation> regenerated = preservers;
        for (const auto& g : preservers) regenerated.push_back(beta.then(g));
        std::sort(regenerated.begin(), regenerated.end());
        if (regenerated != current)
            throw invariant_violation("beta and the preservers do not regenerate the subgroup");

        chain.generators.push_back(beta);
        chain.trace_chain.push_back(y_next);
        chain.subgroup_sizes.push_back(preservers.size());
        current = std::move(preservers);
        y_current = y_next;
    }

    if (current.size() != 1 || !current.front().is_identity())
        throw invariant_violation("chain does not terminate in the trivial subgroup");

    // The generators must produce the whole certificate group.
    std::set<Permutation> generated;
    generated.insert(Permutation::identity(d.v()));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Permutation> snapshot(generated.begin(), generated.end());
        for (const auto& a : snapshot)
            for (const auto& g : chain.generators)
                if (generated.insert(a.then(g)).second) grew = true;
    }
    std::vector<Permutation> all(generated.begin(), generated.end());
    std::vector<Permutation> expected = cert.elements;
    std::sort(expected.begin(), expected.end());
    if (all != expected) throw invariant_violation("generators do not generate the certificate group");

    return chain;
}

Report verify_pyramidal_classification(const Design& d, const PyramidalCertificate& cert) {
    Report rep;

    auto cert_rep = verify_certificate(d, cert);
    std::string first_fail;
    for (const auto& c : cert_rep.checks)
        if (!c.passed) {
            first_fail = c.name + (c.detail.empty() ? "" : ": " + c.detail);
            break;
        }
    rep.add("certificate", cert_rep.all_passed(), first_fail);

    auto action_rep = verify_center_block_action(d, cert);
    first_fail.clear();
    for (const auto& c : action_rep.checks)
        if (!c.passed) {
            first_fail = c.name + (c.detail.empty() ? "" : ": " + c.detail);
            break;
        }
    rep.add("center-block-action", action_rep.all_passed(), first_fail);

    Block moved = cert.moved_set();
    auto idx = d.index_of(moved);
    if (!idx || !rep.all_passed()) {
        rep.add("z-components-pg", false, "prerequisites failed");
        rep.add("group-matches-construction", false, "prerequisites failed");
        rep.add("transpositions-match", false, "prerequisites failed");
        return rep;
    }

    bool all_pg = false;
    try {
        all_pg = classify_z_components(d, *idx).all_pg;
        rep.add("z-components-pg", all_pg, all_pg ? "" : "components fail the PG criterion");
    } catch (const std::exception& e) {
        rep.add("z-components-pg", false, e.what());
    }

    if (!all_pg) {
        rep.add("group-matches-construction", false, "no construction without the PG property");
        rep.add("transpositions-match", false, "no construction without the PG property");
        return rep;
    }

    try {
        auto built = build_group(d, *idx);
        bool same = built.elements == cert.elements;
        rep.add("group-matches-construction", same,
                same ? std::to_string(built.elements.size()) + " elements"
                     : "constructed group differs from the certificate");
    } catch (const std::exception& e) {
        rep.add("group-matches-construction", false, e.what());
    }

    {
        int p_prime = moved.max_point();
        Block z(d.v(), moved.mask() & ~(std::uint64_t{1} << p_prime));
        bool ok = true;
        std::string witness;
        try {
            auto w = decompose(d, *idx, z);
            for (int p : z.points()) {
                int e = cert.element_sending(p, p_prime);
                if (e < 0 || !(cert.elements[static_cast<std::size_t>(e)] ==
                               involution_from_witness(d, w, p))) {
                    ok = false;
                    witness = "certificate transposition at point " + std::to_string(p) +
                              " differs from the constructed involution";
                    break;
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            witness = e.what();
        }
        rep.add("transpositions-match", ok, witness);
    }

    return rep;
}

Report check_normality(const Design& d, int center_index, const NormalityOptions& options) {
    Report rep;
    auto cert = build_group(d, center_index);
    std::vector<Permutation> group = cert.elements;
    std::sort(group.begin(), group.end());

    StabilizerOptions sopt{options.node_budget, options.time_budget_seconds};
    auto ambient = setwise_stabilizer_search(d, d.block(center_index), sopt);
    rep.add("ambient-search-complete", ambient.complete,
            std::to_string(ambient.elements.size()) + " automorphisms preserving the center block, " +
                std::to_string(ambient.nodes) + " nodes");

    bool contains = true;
    for (const auto& g : group)
        if (!std::binary_search(ambient.elements.begin(), ambient.elements.end(), g)) contains = false;
    rep.add("contains-group", contains);

    bool normal = true;
    std::string witness;
    for (const auto& f : ambient.elements) {
        Permutation f_inv = f.inverse();
        std::vector<Permutation> conjugated;
        conjugated.reserve(group.size());
        for (const auto& c : group) conjugated.push_back(f_inv.then(c).then(f));
        std::sort(conjugated.begin(), conjugated.end());
        if (conjugated != group) {
            normal = false;
            witness = "conjugation by an automorphism moves the element set";
            break;
        }
    }
    rep.add("normal", normal, witness);
    return rep;
}

std::vector<std::vector<Permutation>> sharply_transitive_abelian_subgroups(
    const std::vector<Permutation>& elements, const Block& moved) {
    std::vector<Permutation> els = elements;
    std::sort(els.begin(), els.end());
    els.erase(std::unique(els.begin(), els.end()), els.end());
    int n = static_cast<int>(els.size());
    int m = moved.size();
    std::vector<std::vector<Permutation>> out;
    if (m == 0 || n < m) return out;

    auto index_of = [&](const Permutation& g) -> int {
        auto it = std::lower_bound(els.begin(), els.end(), g);
        if (it != els.end() && *it == g) return static_cast<int>(it - els.begin());
        return -1;
    };

    int id_idx = index_of(Permutation::identity(els.front().v()));
    if (id_idx < 0) throw std::invalid_argument("element set lacks the identity");

    // product table; -1 marks products escaping the (possibly truncated) set
    std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] =
                index_of(els[static_cast<std::size_t>(a)].then(els[static_cast<std::size_t>(b)]));
    auto prod = [&](int a, int b) {
        return table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)];
    };

    // closure of a sorted index set; nullopt when it escapes or exceeds m
    auto close = [&](std::vector<int> h) -> std::optional<std::vector<int>> {
        std::set<int> s(h.begin(), h.end());
        std::vector<int> queue(h.begin(), h.end());
        while (!queue.empty()) {
            int a = queue.back();
            queue.pop_back();
            std::vector<int> snapshot(s.begin(), s.end());
            for (int b : snapshot) {
                for (int p : {prod(a, b), prod(b, a)}) {
                    if (p < 0) return std::nullopt;
                    if (s.insert(p).second) {
                        if (static_cast<int>(s.size()) > m) return std::nullopt;
                        queue.push_back(p);
                    }
                }
            }
        }
        return std::vector<int>(s.begin(), s.end());
    };

    int anchor = moved.min_point();
    auto qualifies = [&](const std::vector<int>& h) {
        if (static_cast<int>(h.size()) != m) return false;
        std::uint64_t hit = 0;
        for (int e : h) {
            int b = els[static_cast<std::size_t>(e)](anchor);
            if ((hit >> b) & 1) return false;  // repeated image: not sharply transitive
            hit |= std::uint64_t{1} << b;
        }
        if (hit != moved.mask()) return false;
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = i + 1; j < h.size(); ++j)
                if (prod(h[i], h[j]) != prod(h[j], h[i])) return false;
        return true;
    };

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> results;
    std::vector<std::vector<int>> stack;
    if (auto start = close({id_idx})) stack.push_back(*start);
    while (!stack.empty()) {
        auto h = stack.back();
        stack.pop_back();
        if (!seen.insert(h).second) continue;
        if (static_cast<int>(h.size()) == m) {
            if (qualifies(h)) results.push_back(h);
            continue;
        }
        for (int g = 0; g < n; ++g) {
            if (std::binary_search(h.begin(), h.end(), g)) continue;
            auto ext = h;
            ext.push_back(g);
            if (auto closed = close(std::move(ext))) stack.push_back(*closed);
        }
    }

    std::sort(results.begin(), results.end());
    for (const auto& h : results) {
        std::vector<Permutation> subgroup;
        subgroup.reserve(h.size());
        for (int e : h) subgroup.push_back(els[static_cast<std::size_t>(e)]);
        out.push_back(std::move(subgroup));
    }
    return out;
}

}  // namespace pyra
