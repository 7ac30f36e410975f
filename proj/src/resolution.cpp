#include "chipres/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chipres/linalg.hpp"

namespace chipres {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::F0: return "F0";
        case Variant::F1: return "F1";
        case Variant::Ft: return "Ft";
    }
    return "?";
}

Variant variant_from_string(const std::string& s) {
    if (s == "F0") return Variant::F0;
    if (s == "F1") return Variant::F1;
    if (s == "Ft") return Variant::Ft;
    throw Error("unknown complex variant '" + s + "'");
}

std::vector<int> FreeComplex::ranks() const {
    std::vector<int> r;
    for (const auto& m : modules) r.push_back(static_cast<int>(m.size()));
    return r;
}

namespace {

struct Bases {
    std::vector<std::vector<AcyclicPartition>> elements;
    std::vector<std::map<AcyclicPartition, int>> index;

    int find(int degree, const AcyclicPartition& c) const {
        auto it = index[degree].find(c);
        if (it == index[degree].end()) throw Error("contraction left the basis: " + c.to_string());
        return it->second;
    }
};

Bases enumerate_bases(const Multigraph& g) {
    Bases b;
    for (int k = 1; k <= g.size(); ++k) {
        auto parts = n_acyclic_partitions(g, k);
        std::map<AcyclicPartition, int> idx;
        for (int i = 0; i < static_cast<int>(parts.size()); ++i) idx.emplace(parts[i], i);
        b.elements.push_back(std::move(parts));
        b.index.push_back(std::move(idx));
    }
    return b;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const Divisor& d) {
    std::int64_t s = 0;
    for (int i = 0; i < d.size(); ++i) s += a[i] * d[i];
    return s;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const Monomial& m) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m.exponents().size(); ++i) s += a[i] * m.exponents()[i];
    return s;
}

FreeComplex empty_complex(const Multigraph& g, Variant v, const Bases& b) {
    FreeComplex f;
    f.variant = v;
    f.n = g.size();
    f.modules.resize(b.elements.size());
    for (std::size_t k = 1; k < b.elements.size(); ++k)
        f.differentials.emplace_back(static_cast<int>(b.elements[k - 1].size()), static_cast<int>(b.elements[k].size()));
    return f;
}

std::vector<DifferentialTerm> class_terms(const Multigraph& g, const Bases& b) {
    std::vector<DifferentialTerm> terms;
    for (int k = 1; k < static_cast<int>(b.elements.size()); ++k) {
        for (int col = 0; col < static_cast<int>(b.elements[k].size()); ++col) {
            const AcyclicPartition& c = b.elements[k][col];
            const ChipClass cl{c, class_members(c)};
            for (const ClassEdge& e : class_contractible_edges(cl)) {
                DifferentialTerm t;
                t.degree = k;
                t.col = col;
                t.row = b.find(k - 1, canonical_rep(g, contract(e.witness, e.arc)));
                t.arc = e.arc;
                t.sign = contraction_sign(c.blocks, e.arc);
                t.monomial = monomial_of_divisor(contraction_drop(g, e.witness, e.arc));
                t.representative = is_contractible(c, e.arc);
                terms.push_back(std::move(t));
            }
        }
    }
    return terms;
}

}  // namespace

FreeComplex build_F0(const Multigraph& g) {
    const Bases b = enumerate_bases(g);
    FreeComplex f = empty_complex(g, Variant::F0, b);
    for (std::size_t k = 0; k < b.elements.size(); ++k)
        for (const auto& c : b.elements[k]) f.modules[k].push_back({c, divisor_of(g, c), 0});
    for (int k = 1; k < static_cast<int>(b.elements.size()); ++k) {
        PolyMatrix& d = f.differential(k);
        for (int col = 0; col < static_cast<int>(b.elements[k].size()); ++col) {
            const AcyclicPartition& c = b.elements[k][col];
            for (const Arc& e : contractible_edges(c)) {
                const int row = b.find(k - 1, contract(c, e));
                const Monomial m = monomial_of_divisor(contraction_drop(g, c, e));
                d.add(row, col, Polynomial(m, contraction_sign(c.blocks, e)));
            }
        }
    }
    return f;
}

FreeComplex build_F1(const Multigraph& g) {
    const Bases b = enumerate_bases(g);
    FreeComplex f = empty_complex(g, Variant::F1, b);
    for (std::size_t k = 0; k < b.elements.size(); ++k)
        for (const auto& c : b.elements[k]) f.modules[k].push_back({c, q_reduce(g, divisor_of(g, c)), 0});
    for (const DifferentialTerm& t : class_terms(g, b))
        f.differential(t.degree).add(t.row, t.col, Polynomial(t.monomial, t.sign));
    return f;
}

WeightVector validate_weight_vector(const Multigraph& g, const std::vector<std::int64_t>& lambda, int t_weight) {
    const int n = g.size();
    if (static_cast<int>(lambda.size()) != n)
        throw Error("weight vector has " + std::to_string(lambda.size()) + " entries, expected " + std::to_string(n));
    if (t_weight < 1) throw Error("t weight must be positive");
    for (auto v : lambda)
        if (v <= 0) throw Error("weight vector entries must be positive");
    WeightVector w{lambda, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0), t_weight};
    const IntMatrix lap = laplacian(g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w.y[i] += lap[i][j] * lambda[j];
    for (int i = 0; i + 1 < n; ++i)
        if (w.y[i] <= 0)
            throw Error("Laplacian times weight vector must be positive off the sink (entry " + std::to_string(i + 1) +
                        " is " + std::to_string(w.y[i]) + ")");
    return w;
}

WeightVector weight_vector(const Multigraph& g) {
    const int n = g.size();
    if (n < 2) throw Error("weight vector needs at least two vertices");
    Divisor base(n);
    for (int i = 0; i + 1 < n; ++i) base[i] = 1;
    base[n - 1] = -(n - 1);
    const std::int64_t m = divisor_order(g, base);

    // Reduced system: drop the sink row and column, fix lambda_n = 0.
    const IntMatrix lap = laplacian(g);
    RationalMatrix a(static_cast<std::size_t>(n - 1), std::vector<mpq_class>(static_cast<std::size_t>(n - 1)));
    std::vector<mpq_class> rhs(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) {
        for (int j = 0; j + 1 < n; ++j) a[i][j] = static_cast<long>(lap[i][j]);
        rhs[i] = static_cast<long>(m * base[i]);
    }
    const auto sol = solve(std::move(a), std::move(rhs));
    std::vector<std::int64_t> lambda(static_cast<std::size_t>(n), 0);
    for (int i = 0; i + 1 < n; ++i) {
        if (sol[i].get_den() != 1) throw Error("weight vector solve produced a non-integer entry");
        lambda[i] = sol[i].get_num().get_si();
    }
    const std::int64_t lowest = *std::min_element(lambda.begin(), lambda.end());
    for (auto& v : lambda) v += 1 - lowest;
    return validate_weight_vector(g, lambda, 1);
}

std::vector<DifferentialTerm> homogenization_terms(const Multigraph& g, const WeightVector& w) {
    const Bases b = enumerate_bases(g);
    auto terms = class_terms(g, b);
    for (auto& t : terms) {
        const std::int64_t eps_source = dot(w.lambda, divisor_of(g, b.elements[t.degree][t.col]));
        const std::int64_t eps_target = dot(w.lambda, divisor_of(g, b.elements[t.degree - 1][t.row]));
        t.gap = eps_source - dot(w.lambda, t.monomial) - eps_target;
    }
    return terms;
}

FreeComplex build_Ft(const Multigraph& g, const WeightVector& w) {
    const Bases b = enumerate_bases(g);
    FreeComplex f = empty_complex(g, Variant::Ft, b);
    f.weights = w;
    for (std::size_t k = 0; k < b.elements.size(); ++k)
        for (const auto& c : b.elements[k]) {
            Divisor d = divisor_of(g, c);
            const std::int64_t eps = dot(w.lambda, d);
            f.modules[k].push_back({c, std::move(d), eps});
        }
    for (const DifferentialTerm& t : homogenization_terms(g, w)) {
        if (t.gap < 0) throw Error("negative homogenization gap " + std::to_string(t.gap));
        if (t.gap % w.t_weight != 0)
            throw Error("homogenization gap " + std::to_string(t.gap) + " of term " + t.monomial.to_string() +
                        " is not divisible by the t weight " + std::to_string(w.t_weight));
        const Monomial m = t.monomial * Monomial::t_power(static_cast<int>(t.gap / w.t_weight));
        f.differential(t.degree).add(t.row, t.col, Polynomial(m, t.sign));
    }
    return f;
}

std::vector<int> betti(const Multigraph& g) {
    std::vector<int> out;
    for (int k = 1; k <= g.size(); ++k) {
        int count = 0;
        for (const auto& p : connected_partitions(g, k)) count += static_cast<int>(n_acyclic_orientations(g, p).size());
        out.push_back(count);
    }
    return out;
}

std::vector<Monomial> minimal_generators_MG(const Multigraph& g) {
    std::vector<Monomial> out;
    if (g.size() < 2) return out;
    for (const auto& c : n_acyclic_partitions(g, 2)) out.push_back(monomial_of_divisor(divisor_of(g, c)));
    return out;
}

}  // namespace chipres
