#include <doctest.h>

#include <random>

#include "chipres/linalg.hpp"

using namespace chipres;

namespace {

RationalMatrix matrix(std::initializer_list<std::initializer_list<int>> rows) {
    RationalMatrix m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (int v : r) m.back().emplace_back(v);
    }
    return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
    CHECK(rank_exact(matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank_exact(matrix({{0, 0}, {0, 0}})) == 0);
    CHECK(rank_exact(matrix({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_exact(RationalMatrix{}) == 0);
    RationalMatrix halves{{mpq_class(1, 2), mpq_class(1, 3)}, {mpq_class(3), mpq_class(2)}};
    CHECK(rank_exact(halves) == 1);
}

TEST_CASE("rank equals rank of the transpose") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> entry(-2, 2), size(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        RationalMatrix m(static_cast<std::size_t>(size(rng)));
        const int cols = size(rng);
        for (auto& row : m)
            for (int c = 0; c < cols; ++c) row.emplace_back(trial % 3 == 0 ? entry(rng) * (c % 2) : entry(rng));
        CHECK(rank_exact(m) == rank_exact(transpose(m)));
        CHECK(rank_exact(m) <= std::min<int>(static_cast<int>(m.size()), cols));
    }
}

TEST_CASE("rank of a product of full-rank factors") {
    // A (5x3) * B (3x5) with both of rank 3 has rank 3.
    const auto a = matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {2, 0, 1}});
    const auto b = matrix({{1, 2, 0, 0, 1}, {0, 1, 3, 0, 0}, {0, 0, 0, 1, 5}});
    RationalMatrix prod(5, std::vector<mpq_class>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 3; ++k) prod[i][j] += a[i][k] * b[k][j];
    CHECK(rank_exact(prod) == 3);
}

TEST_CASE("sparse rows") {
    std::vector<SparseRow> rows{{{0, mpz_class(2)}, {3, mpz_class(4)}}, {{0, mpz_class(1)}, {3, mpz_class(2)}}, {{1, mpz_class(7)}}};
    CHECK(rank_exact(rows) == 2);
}

TEST_CASE("solve") {
    const auto x = solve(matrix({{2, 1}, {1, 3}}), {mpq_class(3), mpq_class(5)});
    CHECK(x[0] == mpq_class(4, 5));
    CHECK(x[1] == mpq_class(7, 5));
    CHECK_THROWS_AS(solve(matrix({{1, 2}, {2, 4}}), {mpq_class(1), mpq_class(2)}), Error);
}

TEST_CASE("evaluate a polynomial matrix") {
    PolyMatrix m(2, 2);
    m.set(0, 0, parse_polynomial("x_1 - x_2"));
    m.set(1, 1, parse_polynomial("x_1*x_2*t"));
    Assignment at = Assignment::all(2, 3);
    const auto v = evaluate(m, at);
    CHECK(v[0][0] == 0);
    CHECK(v[1][1] == 27);
    CHECK(rank_exact(v) == 1);

    PolyMatrix constant(1, 2);
    constant.set(0, 1, Polynomial(5));
    CHECK(rank_exact(constant) == 1);
    CHECK_THROWS_AS(rank_exact(m), Error);
}
