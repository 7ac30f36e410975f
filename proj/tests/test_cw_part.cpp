#include <doctest.h>

#include "chipres/cw_part.hpp"
#include "chipres/linalg.hpp"
#include "chipres/resolution.hpp"
#include "test_graphs.hpp"

using namespace chipres;
using chipres::testing::kite;

TEST_CASE("cell counts") {
    const auto p = build_part(kite());
    CHECK(p.cells(0).size() == 6);
    CHECK(p.cells(1).size() == 9);
    CHECK(p.cells(2).size() == 4);
    CHECK(p.cells(-1).size() == 1);

    const auto path = build_part(testing::path(3));
    CHECK(path.cells(0).size() == 2);
    CHECK(path.cells(1).size() == 1);

    CHECK_THROWS_AS(build_part(Multigraph(1, {{0}})), Error);
}

TEST_CASE("saturated graphs have simplicial cells") {
    const auto p = build_part(testing::complete(4));
    for (int d = 0; d <= p.top_dimension(); ++d)
        for (const auto& cell : p.cells(d)) CHECK(static_cast<int>(cell.facets.size()) == d + 1);
}

TEST_CASE("incidences are the F0 signs") {
    for (const auto& g : {kite(), testing::complete(4), testing::path(4)}) {
        const auto p = build_part(g);
        const auto f0 = build_F0(g);
        for (int k = 1; k <= f0.length(); ++k) {
            const auto& d = f0.differential(k);
            const auto& cells = p.cells(k - 1);
            for (int c = 0; c < d.cols(); ++c) {
                int nonzero = 0;
                for (int r = 0; r < d.rows(); ++r) {
                    const auto entry = d.at(r, c);
                    if (entry.is_zero()) continue;
                    ++nonzero;
                    int incidence = 0;
                    for (const auto& [index, sign] : cells[c].facets)
                        if (index == r) incidence = sign;
                    CHECK(mpq_class(incidence) == entry.terms().begin()->second);
                }
                CHECK(nonzero == static_cast<int>(cells[c].facets.size()));
            }
        }
    }
}

TEST_CASE("label checks") {
    auto p = build_part(kite());
    CHECK(check_label_lcm(p));
    p.cells(2).front().label = p.cells(2).front().label * Monomial::variable(0);
    CHECK_FALSE(check_label_lcm(p));
}

TEST_CASE("cellular acyclicity and spheres") {
    const auto p = build_part(kite());
    const auto acyclic = check_cellular_acyclicity(p);
    CHECK(acyclic.ok());
    CHECK(acyclic.checked > 0);
    Monomial join;
    for (const auto& cell : p.cells(0)) join = join.lcm(cell.label);
    for (int h : reduced_homology_below(p, join)) CHECK(h == 0);
    // Nothing lies below 1 except the empty cell.
    for (int h : reduced_homology_below(p, Monomial())) CHECK(h == 0);
    // A single generator bounds exactly one vertex.
    for (int h : reduced_homology_below(p, Monomial({3}))) CHECK(h == 0);

    const auto spheres = check_boundary_spheres(p);
    CHECK(spheres.ok());
    CHECK(spheres.checked == 13);
    CHECK(check_meets(p));
}

TEST_CASE("a broken labeling is detected") {
    auto p = build_part(kite());
    // Relabel one 0-cell so that it sits below a multidegree where its edges do not.
    p.cells(0).front().label = Monomial({0, 0, 0, 5});
    CHECK_FALSE(check_cellular_acyclicity(p).ok());
}
