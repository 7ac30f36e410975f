#include "chipres/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace chipres {

Monomial::Monomial(std::vector<int> exps, int t_exp) : exps_(std::move(exps)), t_(t_exp) {
    if (t_ < 0 || std::any_of(exps_.begin(), exps_.end(), [](int e) { return e < 0; }))
        throw Error("negative exponent in monomial");
    trim();
}

Monomial Monomial::variable(int i, int power) {
    std::vector<int> e(static_cast<std::size_t>(i) + 1, 0);
    e[i] = power;
    return Monomial(std::move(e));
}

Monomial Monomial::t_power(int power) { return Monomial({}, power); }

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

int Monomial::x_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
    if (t_ > other.t_ || exps_.size() > other.exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<int> e(std::max(exps_.size(), other.exps_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(exponent(static_cast<int>(i)), other.exponent(static_cast<int>(i)));
    return Monomial(std::move(e), std::max(t_, other.t_));
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<int> e(std::max(exps_.size(), other.exps_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = exponent(static_cast<int>(i)) + other.exponent(static_cast<int>(i));
    return Monomial(std::move(e), t_ + other.t_);
}

std::string Monomial::to_string() const {
    std::string out;
    auto factor = [&](const std::string& name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += name;
        if (e > 1) out += '^' + std::to_string(e);
    };
    for (std::size_t i = 0; i < exps_.size(); ++i) factor("x_" + std::to_string(i + 1), exps_[i]);
    factor("t", t_);
    return out.empty() ? "1" : out;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    if (a.x_degree() != b.x_degree()) return a.x_degree() > b.x_degree();
    const std::size_t len = std::max(a.exponents().size(), b.exponents().size());
    for (std::size_t i = 0; i < len; ++i) {
        const int ea = a.exponent(static_cast<int>(i));
        const int eb = b.exponent(static_cast<int>(i));
        if (ea != eb) return ea > eb;
    }
    return a.t_exponent() > b.t_exponent();
}

Monomial monomial_of_divisor(const Divisor& d) {
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(d.size()));
    for (int i = 0; i < d.size(); ++i) {
        if (d[i] < 0) throw Error("divisor " + d.to_string() + " has a negative entry");
        e.push_back(static_cast<int>(d[i]));
    }
    return Monomial(std::move(e));
}

Assignment Assignment::all(int n, const mpq_class& value) {
    Assignment a;
    a.x.assign(static_cast<std::size_t>(n), value);
    a.t = value;
    return a;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const mpq_class& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Monomial& m, const mpq_class& c) {
    if (c != 0) terms_.emplace(m, c);
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpq_class Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int Polynomial::max_t_exponent() const {
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.t_exponent());
    return best;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return terms_.size() == other.terms_.size() &&
           std::equal(terms_.begin(), terms_.end(), other.terms_.begin(),
                      [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

namespace {

mpq_class power(const mpq_class& base, int e) {
    mpq_class out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

Polynomial Polynomial::substitute(const Assignment& a) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        mpq_class coef = c;
        std::vector<int> kept(m.exponents().size(), 0);
        for (std::size_t i = 0; i < kept.size() && coef != 0; ++i) {
            const int e = m.exponents()[i];
            if (e == 0) continue;
            if (i < a.x.size() && a.x[i]) coef *= power(*a.x[i], e);
            else kept[i] = e;
        }
        int t_kept = m.t_exponent();
        if (a.t && t_kept > 0 && coef != 0) {
            coef *= power(*a.t, t_kept);
            t_kept = 0;
        }
        out.add_term(Monomial(std::move(kept), t_kept), coef);
    }
    return out;
}

mpq_class Polynomial::evaluate(const Assignment& a) const {
    const Polynomial p = substitute(a);
    if (p.is_zero()) return 0;
    if (p.terms_.size() != 1 || !p.terms_.begin()->first.is_one())
        throw Error("evaluation leaves unassigned variables: " + p.to_string());
    return p.terms_.begin()->second;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const mpq_class mag = abs(c);
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        if (m.is_one()) out += mag.get_str();
        else if (mag == 1) out += m.to_string();
        else out += mag.get_str() + "*" + m.to_string();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Polynomial parse() {
        Polynomial out;
        skip();
        if (pos_ == s_.size()) throw Error("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            out += term() * Polynomial(mpq_class(sign));
            skip();
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("bad polynomial '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + what);
    }

    long integer() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    Polynomial term() {
        mpq_class coef = 1;
        Monomial mono;
        for (;;) {
            skip();
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                mpq_class value(integer());
                if (peek() == '/') {
                    ++pos_;
                    value /= integer();
                }
                coef *= value;
            } else if (c == 'x') {
                ++pos_;
                if (peek() == '_') ++pos_;
                const long index = integer();
                if (index < 1) fail("variable index must be positive");
                mono = mono * Monomial::variable(static_cast<int>(index - 1), exponent());
            } else if (c == 't') {
                ++pos_;
                mono = mono * Monomial::t_power(exponent());
            } else {
                fail("expected a factor");
            }
            skip();
            if (peek() != '*') break;
            ++pos_;
        }
        return Polynomial(mono, coef);
    }

    int exponent() {
        if (peek() != '^') return 1;
        ++pos_;
        return static_cast<int>(integer());
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------

void PolyMatrix::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw Error("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
}

Polynomial PolyMatrix::at(int r, int c) const {
    check(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Polynomial{} : it->second;
}

void PolyMatrix::set(int r, int c, Polynomial p) {
    check(r, c);
    if (p.is_zero()) entries_.erase({r, c});
    else entries_[{r, c}] = std::move(p);
}

void PolyMatrix::add(int r, int c, const Polynomial& p) { set(r, c, at(r, c) + p); }

int PolyMatrix::column_weight(int c) const {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                          [c](const auto& e) { return e.first.second == c; }));
}

PolyMatrix PolyMatrix::substitute(const Assignment& a) const {
    PolyMatrix out(rows_, cols_);
    for (const auto& [rc, p] : entries_) out.set(rc.first, rc.second, p.substitute(a));
    return out;
}

std::string PolyMatrix::to_string() const {
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rows_),
                                                std::vector<std::string>(static_cast<std::size_t>(cols_), "0"));
    std::vector<std::size_t> width(static_cast<std::size_t>(cols_), 1);
    for (const auto& [rc, p] : entries_) {
        auto& cell = cells[rc.first][rc.second];
        cell = p.to_string();
        width[rc.second] = std::max(width[rc.second], cell.size());
    }
    std::string out;
    for (const auto& row : cells) {
        out += '[';
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += "  ";
            out += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        out += "]\n";
    }
    return out;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows())
        throw Error("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    std::map<int, std::vector<std::pair<int, const Polynomial*>>> b_rows;
    for (const auto& [rc, p] : b.entries()) b_rows[rc.first].emplace_back(rc.second, &p);
    std::map<std::pair<int, int>, Polynomial> acc;
    for (const auto& [rc, p] : a.entries()) {
        auto it = b_rows.find(rc.second);
        if (it == b_rows.end()) continue;
        for (const auto& [col, q] : it->second) acc[{rc.first, col}] += p * *q;
    }
    PolyMatrix out(a.rows(), b.cols());
    for (auto& [rc, p] : acc) out.set(rc.first, rc.second, std::move(p));
    return out;
}

}  // namespace chipres
