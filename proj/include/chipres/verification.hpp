#ifndef CHIPRES_VERIFICATION_HPP
#define CHIPRES_VERIFICATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chipres/resolution.hpp"

namespace chipres {

// --- Complex-level checks ---------------------------------------------------

bool check_dd_zero(const FreeComplex& f);
/// No differential entry has a nonzero constant term.
bool check_minimal(const FreeComplex& f);
/// Every term of every F1 differential maps the source class onto the target class.
bool check_class_multidegrees(const Multigraph& g, const FreeComplex& f);

// --- Monomial ideal helpers -----------------------------------------------------

/// Minimalization of x^{S -> complement} over nonempty S avoiding the sink,
/// computed directly from cuts. Sorted in graded-lex order.
std::vector<Monomial> parking_generators_bruteforce(const Multigraph& g);
bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& generators);
/// All least common multiples of nonempty subsets of the generators.
std::vector<Monomial> lcm_closure(const std::vector<Monomial>& generators);

// --- Strand and generic exactness --------------------------------------------

struct StrandReport {
    Divisor multidegree;
    std::vector<int> homology;  // dimension per homological degree
    bool in_ideal = false;
    bool ok = false;
};

/// One report per multidegree below the join of the basis multidegrees.
std::vector<StrandReport> strand_exactness_F0(const Multigraph& g);
std::vector<StrandReport> strand_exactness_F0(const Multigraph& g, const FreeComplex& f0);

/// Seed from CHIPRES_SEED if set, else a fixed constant.
std::uint64_t default_seed();

struct GenericReport {
    std::vector<int> differential_ranks;  // [k-1] is the rank of delta_k
    bool ok = false;
};

/// Rank bookkeeping at a pseudo-random integer point in [2, 10^4] (t := 1).
GenericReport generic_exactness(const FreeComplex& f, std::uint64_t seed = default_seed());

// --- Independent Betti oracle ---------------------------------------------------

struct OracleResult {
    std::vector<int> totals;
    std::map<Monomial, std::vector<int>, GradedLexGreater> graded;  // nonzero entries only
};

/// Betti numbers of R/M_G from the upper Koszul simplicial complexes at the
/// lcm lattice of the generators.
OracleResult betti_oracle(const Multigraph& g);

// --- Star decomposition -----------------------------------------------------------

/// j-edges of an n-acyclic partition: contractible arcs out of the block of j
/// whose crossing edges all meet j.
std::vector<Arc> j_edges(const Multigraph& g, const AcyclicPartition& c, Vertex j);

struct StarSummand {
    int degree = 0;  // homological degree of the host
    AcyclicPartition host;
    std::vector<Arc> edges;

    int vertices() const { return static_cast<int>(edges.size()) + 1; }
};

struct StarDecomposition {
    Vertex j = 0;
    std::vector<StarSummand> summands;
    std::map<std::pair<int, int>, int> multiplicity;  // (degree, vertices) -> count
    std::vector<int> dimensions;                      // per homological degree
    bool bijective = false;        // basis elements <-> (summand, subset) pairs
    bool matrices_match = false;   // specialized differentials equal the direct sum, with signs
    bool summands_exact = false;
    bool ok() const { return bijective && matrices_match && summands_exact; }
};

StarDecomposition jstar_decompose(const Multigraph& g, Vertex j);
std::vector<int> star_betti_formula(const Multigraph& g, Vertex j);
std::vector<int> star_betti_formula(const StarDecomposition& d, int n);

// --- Degeneration and special cases ------------------------------------------------

struct DegenerationReport {
    bool built = false;
    std::string error;
    bool zero_fiber = false;
    bool one_fiber = false;
    bool gaps = false;
    bool dd_zero = false;
    bool ok() const { return built && zero_fiber && one_fiber && gaps && dd_zero; }
};

DegenerationReport degeneration_fibers(const Multigraph& g, const WeightVector& w);
DegenerationReport degeneration_fibers(const Multigraph& g);

/// theirs[k][pi(r)][pi(c)] = s(r) s(c) ours[k][r][c] for basis permutations pi
/// and signs s in every degree; differentials listed from delta_1 upward.
struct SignedMatch {
    std::vector<std::vector<int>> permutation;
    std::vector<std::vector<int>> signs;
};
std::optional<SignedMatch> match_signed_permutation(const std::vector<PolyMatrix>& ours,
                                                    const std::vector<PolyMatrix>& theirs);

/// Koszul complex on the given elements, basis subsets in colex order.
std::vector<PolyMatrix> koszul_complex(const std::vector<Polynomial>& elements);

struct SpecialCaseReport {
    bool tree_checked = false;
    bool tree_ok = false;
    bool saturated_checked = false;
    bool saturated_ok = false;
    bool ok() const { return (!tree_checked || tree_ok) && (!saturated_checked || saturated_ok); }
};

SpecialCaseReport special_case_checks(const Multigraph& g);

}  // namespace chipres

#endif
