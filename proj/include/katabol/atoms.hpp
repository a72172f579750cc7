#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "katabol/operators.hpp"
#include "katabol/partition.hpp"
#include "katabol/poly.hpp"
#include "katabol/schur.hpp"
#include "katabol/tableau.hpp"

namespace katabol {

// Expansion indexed by k-bounded partitions in the graded-atom basis.  The container is
// the same as for Schur expansions; which basis a map is written in is part of each
// function's contract.
using AtomExpansion = PolyExpansion;

// Lexicographic order on partition pairs (first component decides, then second).
struct PartitionPairLess {
    bool operator()(const std::pair<Partition, Partition>& a,
                    const std::pair<Partition, Partition>& b) const {
        if (a.first != b.first) return total_less(a.first, b.first);
        return total_less(a.second, b.second);
    }
};

using CoproductMap =
    std::map<std::pair<Partition, Partition>, BivariatePoly, PartitionPairLess>;

// Outcome of a single machine check of a conjectured identity.  Checks never throw on a
// falsified claim; they return a verdict with a witness string instead.
enum class VerdictStatus { holds, counterexample, ambiguous };

struct Verdict {
    std::string claim;       // short identifier of the property checked
    std::string parameters;  // instance data, e.g. "lambda=[2,1] k=3"
    VerdictStatus status = VerdictStatus::holds;
    std::string witness;     // empty when the claim holds; otherwise the failing datum
};

std::string to_string(VerdictStatus s);

// Graded poset with vertices ranked by charge (cyclage posets) or degree (the e_1
// poset).  Edges join consecutive ranks only.  For cyclage posets the tag records which
// one-step relation produced the edge: `up` when moving the first reading-word letter to
// the end of the lower vertex gives the upper one, `down` when moving the last letter of
// the upper vertex to the front gives the lower one, `both` when both hold.
enum class EdgeTag { up, down, both };

struct PosetVertex {
    std::optional<Tableau> tableau;  // absent for posets over partitions only
    Partition shape;
    int rank = 0;
};

struct PosetEdge {
    int low = 0;  // index of the vertex on the smaller rank
    int high = 0;
    EdgeTag tag = EdgeTag::both;
};

struct RankedPoset {
    std::vector<PosetVertex> vertices;
    std::vector<PosetEdge> edges;

    int min_rank() const;
    int max_rank() const;
    // Number of vertices on each rank from min_rank() to max_rank().
    std::vector<int> rank_sizes() const;
    bool adjacent(int a, int b) const;
    bool is_connected() const;
};

// Charge-graded Schur generating function of the level-k atom indexed by lambda:
// the sum of t^{charge} S_{shape} over the atom members.  The leading (charge-0) term
// is S_lambda.  Requires lambda to be k-bounded.
PolyExpansion atom_function(const Partition& lambda, int k);

// The same with t specialised to 1 (exact evaluation of the polynomial coefficients).
PolyExpansion atom_function_t1(const Partition& lambda, int k);

// Rewrite a Schur expansion in the level-k atom basis by peeling the smallest support
// index.  The change of basis is unitriangular for the dominance order, so repeatedly
// subtracting coeff * atom_function(min index) terminates.  Throws invalid_input if at
// any stage the smallest remaining support index has a part exceeding k: the input then
// lies outside the span of the level-k atoms.
AtomExpansion expand_in_atoms(const PolyExpansion& f, int k);

// Same peel against the t = 1 atom functions (for products evaluated at t = 1).
AtomExpansion expand_in_atoms_t1(const PolyExpansion& f, int k);

// Atom expansion of the charge-graded homogeneous function indexed by mu (with_q =
// false) or of its two-parameter refinement (with_q = true).  The coefficients are the
// level-k weight polynomials; conjecturally they have nonnegative integer coefficients,
// which callers check via BivariatePoly::coefficients_nonnegative.
AtomExpansion k_kostka(const Partition& mu, int k, bool with_q);

// Cyclage/cocyclage poset on a set of tableaux sharing one evaluation.  The rank of a
// vertex is its charge; edges are computed between consecutive ranks by applying the two
// one-step moves to representatives with sorted evaluation.  Vertices are listed sorted
// by (rank, tableau order).
RankedPoset build_poset(const TableauSet& s);

// One copy: the minimal-charge member indexes the copy, `members` is the whole block.
struct Copy {
    Tableau index;
    TableauSet members;
};

struct CopyDecomposition {
    std::vector<Copy> copies;
    Verdict verdict;
};

// Partition all tableaux of evaluation mu into blocks isomorphic (as shape-labelled
// ranked posets, with charge shifted by the index's charge) to level-k atoms.  Greedy on
// the minimal-charge unassigned tableau; a backtracking search matches the reference
// atom's poset vertex by vertex.  If some block admits no completion the verdict is a
// counterexample; if two different member sets complete the same index the verdict is
// `ambiguous` (the first completion, in deterministic order, is still used).
CopyDecomposition decompose_copies(const Partition& mu, int k);

// Split one level-k copy into level-k2 copies, k < k2, by the same matching.  The input
// must be a single copy (its minimal-charge member must be unique up to the matching);
// the ranks used are charges relative to the minimum present.
CopyDecomposition refine_copies(const TableauSet& copy, int k, int k2);

enum class PieriKind { row, column };

// Index sets of the conjectured level-k Pieri rules.  For `row` (multiplication by the
// complete homogeneous h_ell): the k-bounded mu for which mu/lambda is a horizontal
// ell-strip and the skew of the k-conjugates is a vertical ell-strip.  For `column`
// (the elementary e_ell): vertical here, horizontal on the conjugates.
std::vector<Partition> pieri_sets(const Partition& lambda, int ell, int k, PieriKind kind);

struct ProductExpansion {
    AtomExpansion coeffs;  // constants, stored as degree-0 polynomials
    Verdict verdict;
};

// Product of two level-k atom functions at t = 1, re-expanded in level-k atoms at t = 1.
// The verdict checks 0 <= c <= (Littlewood--Richardson coefficient) for every index, and
// equality with the Littlewood--Richardson expansion when k >= |mu|.
ProductExpansion atom_product_t1(const Partition& lambda, const Partition& mu, int k);

struct CoproductResult {
    CoproductMap coeffs;
    Verdict verdict;
};

// Two-alphabet expansion: write the lambda atom of the sum of two alphabets as a sum of
// g_{mu,rho}(t) * (mu atom in X) * (rho atom in Y).  Computed by expanding the Schur
// coproduct and peeling atom (x) atom products in lexicographic index order.  The
// verdict checks that every g has nonnegative integer coefficients.
CoproductResult coproduct_g(const Partition& lambda, int k);

// Poset of the k! k-irreducible partitions ranked by degree, with an edge lambda -- mu
// whenever the mu atom occurs in e_1 times the lambda atom at t = 1 after discarding
// every non-irreducible index.  Practical up to k = 4; the top degree grows as the
// degree of the maximal irreducible.
RankedPoset irreducible_e1_poset(int k);

// Coefficient list of prod_{i=1}^{k-1} (1 + q^i + q^{2i} + ... + q^{(k-i)i}), the
// degree generating function of the k-irreducible partitions.
std::vector<Integer> irreducible_rank_counts(int k);

struct OmegaDuality {
    int exponent = 0;            // the t-power making the two sides match
    bool expansion_matches = false;
    bool max_charge_unique = false;
    Partition max_charge_shape;  // shape of the maximal-charge atom member
    bool max_charge_shape_matches = false;  // equals the transpose of the k-conjugate
    bool holds() const {
        return expansion_matches && max_charge_unique && max_charge_shape_matches;
    }
};

// Check the duality omega A_lambda[X;t] = t^e A_{lambda*}[X;1/t] where lambda* is the
// k-conjugate, together with the maximal-charge member check.  The exponent is computed
// from the top charge, not predicted.
OmegaDuality omega_duality_check(const Partition& lambda, int k);

struct UnimodalityResult {
    std::vector<Integer> counts;  // members per charge, lowest charge first
    bool unimodal = false;
};

UnimodalityResult unimodality_check(const Partition& lambda, int k);

// Classification of a standard tableau by peeling rectangle-indexed blocks, defined at
// level 2 and level 3.  `steps` lists the peeled blocks outermost first: at level 2 the
// rectangle widths (2 for the (2) row, 1 for the (1,1) column); at level 3 the operator
// ids below.  `terminal` is what remains: the leftover cell count (0 or 1) at level 2,
// the seed family id at level 3.  Level 3 extraction can in principle be ambiguous or
// fail; the status field reports this (an exhaustive search over small sizes finds
// neither).
struct StandardDescriptor {
    int level = 2;
    std::vector<int> steps;
    int terminal = 0;
    VerdictStatus status = VerdictStatus::holds;

    bool operator==(const StandardDescriptor& o) const {
        return level == o.level && steps == o.steps && terminal == o.terminal;
    }
    bool operator!=(const StandardDescriptor& o) const { return !(*this == o); }
};

StandardDescriptor classify_standard(const Tableau& t, int k);

// The partition naming the atom a descriptor classifies its tableau into: the sorted
// concatenation of the peeled rectangles and the terminal seed's shape.
Partition descriptor_shape(const StandardDescriptor& d);

// The ten level-3 chain operators, as the standard tableaux replacing the minimal
// rectangle, and the eight seed families ending a chain.  Ids index these tables.
const std::vector<Tableau>& level3_operators();
const std::vector<TableauSet>& level3_seed_families();
std::string level3_operator_name(int id);
std::string level3_family_name(int id);

// Forward action of one level-3 operator on a set of standard tableaux: add the
// rectangle by repeated row insertion of its content, replace the minimal rectangle
// by the operator tableau, then relabel the non-operator letters onto the complement
// order-preservingly.  Exposed so tests can cross-check extraction against building.
TableauSet apply_level3_operator(int id, const TableauSet& s);

// Charge-graded Schur sum over the tableaux of straight evaluation mu (the
// concatenation of the rectangles, which must be dominant) surviving the chain of
// restricted katabolisms along the sequence.  Each rectangle must fit in the level-k
// staircase, i.e. be one of the k-rectangles.
PolyExpansion generalized_kostka(const std::vector<Partition>& rectangles, int k);

}  // namespace katabol
