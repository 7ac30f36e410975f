#ifndef CHIPRES_MULTIPOLY_HPP
#define CHIPRES_MULTIPOLY_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chipres/graph.hpp"

namespace chipres {

/// x^a * t^k. Exponent vectors are stored without trailing zeros so that
/// monomials over different numbers of variables compare equal when they are.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps, int t_exp = 0);

    static Monomial variable(int i, int power = 1);
    static Monomial t_power(int power);

    int exponent(int i) const { return i < static_cast<int>(exps_.size()) ? exps_[i] : 0; }
    const std::vector<int>& exponents() const { return exps_; }
    int t_exponent() const { return t_; }
    int x_degree() const;
    int total_degree() const { return x_degree() + t_; }
    bool is_one() const { return exps_.empty() && t_ == 0; }

    /// Componentwise order, including the t exponent.
    bool divides(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial without_t() const { return Monomial(exps_); }

    Monomial operator*(const Monomial& other) const;

    auto operator<=>(const Monomial&) const = default;

    /// "x_1^2*x_3*t"; the unit monomial prints as "1".
    std::string to_string() const;

private:
    void trim();

    std::vector<int> exps_;
    int t_ = 0;
};

/// Graded lexicographic in the x variables, largest first; t breaks ties.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial monomial_of_divisor(const Divisor& d);

/// Per-variable assignment used by substitution; nullopt keeps the variable.
struct Assignment {
    std::vector<std::optional<mpq_class>> x;
    std::optional<mpq_class> t;

    static Assignment all(int n, const mpq_class& value);
};

/// Sparse polynomial in x_1..x_n and t with exact rational coefficients.
class Polynomial {
public:
    using Terms = std::map<Monomial, mpq_class, GradedLexGreater>;

    Polynomial() = default;
    Polynomial(const mpq_class& c);  // NOLINT: constants convert implicitly
    Polynomial(long c) : Polynomial(mpq_class(c)) {}
    Polynomial(int c) : Polynomial(mpq_class(c)) {}
    explicit Polynomial(const Monomial& m, const mpq_class& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }
    mpq_class coefficient(const Monomial& m) const;
    mpq_class constant_term() const { return coefficient(Monomial{}); }
    int max_t_exponent() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& other) const;

    Polynomial substitute(const Assignment& a) const;
    /// Every variable must be assigned.
    mpq_class evaluate(const Assignment& a) const;

    /// e.g. "x_1^2*x_2 - x_3*x_4^2*t"; zero prints as "0".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const mpq_class& c);

    Terms terms_;
};

/// Inverse of Polynomial::to_string. Also accepts "x1" for "x_1".
Polynomial parse_polynomial(std::string_view text);

/// Sparse rows x cols matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Polynomial at(int r, int c) const;
    void set(int r, int c, Polynomial p);
    void add(int r, int c, const Polynomial& p);
    const std::map<std::pair<int, int>, Polynomial>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    int column_weight(int c) const;

    PolyMatrix substitute(const Assignment& a) const;
    bool operator==(const PolyMatrix&) const = default;

    std::string to_string() const;

private:
    void check(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Polynomial> entries_;
};

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace chipres

#endif
