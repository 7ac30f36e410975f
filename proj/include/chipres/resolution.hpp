#ifndef CHIPRES_RESOLUTION_HPP
#define CHIPRES_RESOLUTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chipres/graph.hpp"
#include "chipres/multipoly.hpp"
#include "chipres/partitions.hpp"

namespace chipres {

enum class Variant { F0, F1, Ft };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct BasisElement {
    AcyclicPartition key;  // n-acyclic representative
    Divisor multidegree;   // D(key) for F0 and Ft, its q-reduced class for F1
    std::int64_t weight = 0;  // lambda . D(key), Ft only

    bool operator==(const BasisElement&) const = default;
};

struct WeightVector {
    std::vector<std::int64_t> lambda;
    std::vector<std::int64_t> y;  // Laplacian times lambda
    int t_weight = 1;

    bool operator==(const WeightVector&) const = default;
};

/// Complex of free modules F_{n-1} -> ... -> F_0.
struct FreeComplex {
    Variant variant = Variant::F0;
    int n = 0;
    std::vector<std::vector<BasisElement>> modules;  // index = homological degree
    std::vector<PolyMatrix> differentials;           // [k-1] maps degree k to degree k-1
    std::optional<WeightVector> weights;

    int length() const { return static_cast<int>(modules.size()) - 1; }
    int rank(int k) const { return static_cast<int>(modules.at(k).size()); }
    std::vector<int> ranks() const;
    const PolyMatrix& differential(int k) const { return differentials.at(k - 1); }
    PolyMatrix& differential(int k) { return differentials.at(k - 1); }

    bool operator==(const FreeComplex&) const = default;
};

/// One term of a differential of the class complex before homogenization.
struct DifferentialTerm {
    int degree = 0;  // source homological degree
    int row = 0;
    int col = 0;
    Arc arc;
    int sign = 1;
    Monomial monomial;
    bool representative = false;  // arc is contractible in the n-acyclic member
    std::int64_t gap = 0;         // eps(source) - lambda . monomial - eps(target)
};

FreeComplex build_F0(const Multigraph& g);
FreeComplex build_F1(const Multigraph& g);

/// Default weight vector: y the least positive multiple of (1,...,1,-(n-1))
/// in the Laplacian lattice and lambda its preimage shifted to have minimum 1.
WeightVector weight_vector(const Multigraph& g);
/// Checks positivity conditions and fills in y.
WeightVector validate_weight_vector(const Multigraph& g, const std::vector<std::int64_t>& lambda, int t_weight = 1);

/// Terms of the class complex with their homogenization gaps under w.
std::vector<DifferentialTerm> homogenization_terms(const Multigraph& g, const WeightVector& w);
FreeComplex build_Ft(const Multigraph& g, const WeightVector& w);

std::vector<int> betti(const Multigraph& g);
/// Degree-one multidegrees of the monomial complex, in basis order.
std::vector<Monomial> minimal_generators_MG(const Multigraph& g);

}  // namespace chipres

#endif
