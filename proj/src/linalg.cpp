#include "chipres/linalg.hpp"

#include <algorithm>
#include <map>

namespace chipres {

namespace {

void make_primitive(SparseRow& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*row - b*pivot, both with the same leading column, which cancels.
SparseRow combine(const SparseRow& row, const SparseRow& pivot) {
    const mpz_class& a = pivot.front().second;
    const mpz_class& b = row.front().second;
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            mpz_class v = a * row[i].second - b * pivot[j].second;
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

int rank_exact(std::vector<SparseRow> rows) {
    // Shorter rows first keeps fill-in low.
    std::stable_sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
    std::map<int, SparseRow> pivots;
    for (SparseRow& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                make_primitive(row);
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            row = combine(row, it->second);
            if (!row.empty()) make_primitive(row);
        }
    }
    return static_cast<int>(pivots.size());
}

int rank_exact(const RationalMatrix& m) {
    std::vector<SparseRow> rows;
    rows.reserve(m.size());
    for (const auto& r : m) {
        mpz_class den = 1;
        for (const auto& v : r)
            if (v != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        SparseRow row;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) {
                mpq_class scaled = r[c] * den;
                row.emplace_back(static_cast<int>(c), scaled.get_num());
            }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rank_exact(std::move(rows));
}

int rank_exact(const PolyMatrix& m) {
    RationalMatrix dense(static_cast<std::size_t>(m.rows()), std::vector<mpq_class>(static_cast<std::size_t>(m.cols())));
    for (const auto& [rc, p] : m.entries()) {
        if (p.term_count() != 1 || !p.terms().begin()->first.is_one())
            throw Error("rank of a non-constant matrix entry: " + p.to_string());
        dense[rc.first][rc.second] = p.constant_term();
    }
    return rank_exact(dense);
}

RationalMatrix transpose(const RationalMatrix& m) {
    if (m.empty()) return {};
    RationalMatrix t(m[0].size(), std::vector<mpq_class>(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
    return t;
}

std::vector<mpq_class> solve(RationalMatrix a, std::vector<mpq_class> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw Error("solve: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw Error("solve: singular matrix");
        std::swap(a[p], a[col]);
        std::swap(b[p], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const mpq_class f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
    return b;
}

RationalMatrix evaluate(const PolyMatrix& m, const Assignment& point) {
    RationalMatrix out(static_cast<std::size_t>(m.rows()), std::vector<mpq_class>(static_cast<std::size_t>(m.cols())));
    for (const auto& [rc, p] : m.entries()) out[rc.first][rc.second] = p.evaluate(point);
    return out;
}

}  // namespace chipres
