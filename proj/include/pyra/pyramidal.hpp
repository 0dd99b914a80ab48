#pragma once

#include "pyra/decomposition.hpp"
#include "pyra/report.hpp"

namespace pyra {

/// Witness that a design admits an elementary abelian automorphism group
/// fixing `fixed_set` pointwise and acting sharply transitively on the
/// remaining points. `elements` is canonically sorted and contains the
/// identity; orbit_witness[a*v+b] is the index of the unique element
/// sending moved point a to moved point b (-1 off the moved set).
struct PyramidalCertificate {
    Block fixed_set;
    std::vector<Permutation> elements;
    std::vector<int> orbit_witness;

    Block moved_set() const { return fixed_set.complement(); }
    int element_sending(int a, int b) const {
        return orbit_witness.at(static_cast<std::size_t>(a) * static_cast<std::size_t>(fixed_set.v()) +
                                static_cast<std::size_t>(b));
    }
};

/// Assembles a certificate from a fixed set and an element list: sorts the
/// elements and builds the orbit table. Throws invariant_violation when
/// the elements do not act sharply transitively on the complement or fail
/// to fix the fixed set pointwise.
PyramidalCertificate make_certificate(const Block& fixed_set, std::vector<Permutation> elements);

/// The involution that swaps p with the excluded point of z and swaps the
/// two remaining points of every design line of the Z-side component
/// through p, fixing everything outside the center block. Requires the
/// lines through p to partition the rest of z into pairs (that is exactly
/// the PG criterion at p); domain error otherwise.
Permutation point_involution(const Design& d, const Block& center, const Block& z, int p);

/// Builds the full group: the identity plus one involution per point of
/// a default z (the center block minus its largest point), closed under
/// composition. Construction is refused when the Z-side components fail
/// the PG criterion. The result is independent of which z is used; this
/// is re-verified internally with a second choice.
PyramidalCertificate build_group(const Design& d, int center_index);

/// Re-derives every certificate invariant from scratch: element validity,
/// automorphism property, closure, commutativity, inverses, pointwise
/// fixed set, element count, and sharp transitivity with the orbit table.
Report verify_certificate(const Design& d, const PyramidalCertificate& cert);

struct StabilizerOptions {
    std::uint64_t node_budget = 0;     // 0 = unlimited
    double time_budget_seconds = 0.0;  // 0 = unlimited
};

struct StabilizerResult {
    std::vector<Permutation> elements;  // canonical order
    bool complete = false;              // false only when a budget was hit
    std::uint64_t nodes = 0;
};

/// Every automorphism fixing `fixed` pointwise, by pruned backtracking
/// over the images of the moved points. Exhaustive within budget; a
/// budget hit is reported, never silently truncated.
StabilizerResult stabilizer_search(const Design& d, const Block& fixed,
                                   const StabilizerOptions& options = {});

/// Checks the structural consequences of a sharply transitive abelian
/// action: the moved set is a block, it is a center block, and every
/// element either fixes or transposes each complementary block pair.
Report verify_center_block_action(const Design& d, const PyramidalCertificate& cert);

/// Descending chain of involutions extracted from a certificate group:
/// generators[i] transposes a trace pair refining trace_chain[i], and the
/// subgroup preserving trace_chain[i] has index 2 in the previous one.
struct InvolutionChain {
    std::vector<Permutation> generators;      // one per halving step
    std::vector<Block> trace_chain;           // strictly nested, sizes halve down to 1
    std::vector<std::size_t> subgroup_sizes;  // preserver subgroup orders along the chain
};

/// Runs the halving procedure on the certificate group: split a trace
/// pair, find an involution transposing it (directly, or as a quotient of
/// two transposers with equal squares), descend into the preserver
/// subgroup. A stall would falsify the classification and is reported as
/// an invariant violation.
InvolutionChain extract_involution_chain(const Design& d, const PyramidalCertificate& cert);

/// Full classification re-check for one certificate: center-block action,
/// PG verdict of the Z-side components, equality with the constructed
/// group, and agreement of each certificate transposition with the
/// corresponding constructed involution.
Report verify_pyramidal_classification(const Design& d, const PyramidalCertificate& cert);

struct NormalityOptions {
    std::uint64_t node_budget = 0;
    double time_budget_seconds = 0.0;
};

/// Conjugates the constructed group by every automorphism preserving the
/// center block setwise (found by exhaustive search) and checks the
/// element set is invariant.
Report check_normality(const Design& d, int center_index, const NormalityOptions& options = {});

/// All automorphisms mapping `setwise` onto itself as a set.
StabilizerResult setwise_stabilizer_search(const Design& d, const Block& setwise,
                                           const StabilizerOptions& options = {});

/// Subgroups of the given closed element set that have the same order as
/// `moved`, are abelian, and act sharply transitively on `moved`. The
/// element list must contain the identity. Used to decide whether a
/// pyramidal group exists at all over a given fixed set.
std::vector<std::vector<Permutation>> sharply_transitive_abelian_subgroups(
    const std::vector<Permutation>& elements, const Block& moved);

}  // namespace pyra
