// Acceptance runner. With no arguments every criterion runs; otherwise only
// the numbered ones. Prints one PASS/FAIL line per criterion and exits 1 if
// any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chipres/cw_part.hpp"
#include "chipres/resolution.hpp"
#include "chipres/verification.hpp"
#include "kite_matrices.hpp"
#include "test_graphs.hpp"

using namespace chipres;
namespace t = chipres::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int number;
    double limit_seconds;
    std::function<Outcome()> body;
};

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

// Normalizes a polynomial up to sign so that its leading coefficient is positive.
std::string up_to_sign(Polynomial p) {
    if (!p.is_zero() && p.terms().begin()->second < 0) p = -p;
    return p.to_string();
}

std::set<std::string> entries_up_to_sign(const PolyMatrix& m) {
    std::set<std::string> out;
    for (const auto& [rc, p] : m.entries()) out.insert(up_to_sign(p));
    return out;
}

std::set<std::string> exact_entries(const PolyMatrix& m) {
    std::set<std::string> out;
    for (const auto& [rc, p] : m.entries()) out.insert(p.to_string());
    return out;
}

const std::vector<Multigraph>& corpus() {
    static const std::vector<Multigraph> graphs = t::corpus();
    return graphs;
}

PolyMatrix at_t(const PolyMatrix& m, int value) {
    Assignment a;
    a.t = mpq_class(value);
    return m.substitute(a);
}

bool fibers_reproduce(const FreeComplex& ft, const FreeComplex& f0, const FreeComplex& f1) {
    for (int k = 1; k <= ft.length(); ++k)
        if (at_t(ft.differential(k), 0) != f0.differential(k) || at_t(ft.differential(k), 1) != f1.differential(k))
            return false;
    return true;
}

// Blocks a and b merged, in canonical order.
std::vector<VertexSet> merged(std::vector<VertexSet> blocks, int a, int b) {
    blocks[a] |= blocks[b];
    blocks.erase(blocks.begin() + b);
    std::sort(blocks.begin(), blocks.end(), [](VertexSet x, VertexSet y) { return min_vertex(x) < min_vertex(y); });
    return blocks;
}

// Bridges of the quotient graph of the blocks, found by deleting each edge
// and testing connectivity.
std::vector<std::pair<int, int>> quotient_bridges(const Multigraph& g, const std::vector<VertexSet>& blocks) {
    const int k = static_cast<int>(blocks.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.cut_weight(blocks[a], blocks[b]) > 0) edges.emplace_back(a, b);
    std::vector<std::pair<int, int>> bridges;
    for (std::size_t skip = 0; skip < edges.size(); ++skip) {
        std::vector<int> component(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) component[i] = i;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t e = 0; e < edges.size(); ++e) {
                if (e == skip) continue;
                auto [a, b] = edges[e];
                const int m = std::min(component[a], component[b]);
                if (component[a] != m || component[b] != m) {
                    component[a] = component[b] = m;
                    changed = true;
                }
            }
        }
        if (component[edges[skip].first] != component[edges[skip].second]) bridges.push_back(edges[skip]);
    }
    return bridges;
}

// Binomial entries of F1 sit exactly at the contractions of quotient bridges.
bool binomials_at_bridges(const Multigraph& g, const FreeComplex& f1, std::string& why) {
    for (int k = 1; k <= f1.length(); ++k) {
        const auto& d = f1.differential(k);
        for (int c = 0; c < d.cols(); ++c) {
            const auto& source = f1.modules[k][c].key;
            std::set<std::vector<VertexSet>> expected;
            for (auto [a, b] : quotient_bridges(g, source.blocks)) expected.insert(merged(source.blocks, a, b));
            std::multiset<std::vector<VertexSet>> found;
            for (int r = 0; r < d.rows(); ++r) {
                const auto p = d.at(r, c);
                if (p.term_count() == 2) found.insert(f1.modules[k - 1][r].key.blocks);
                if (p.term_count() > 2) {
                    why = "entry with more than two terms";
                    return false;
                }
            }
            if (found.size() != expected.size() || std::set<std::vector<VertexSet>>(found.begin(), found.end()) != expected) {
                why = "degree " + std::to_string(k) + " column " + std::to_string(c) + " (" + source.to_string() + ")";
                return false;
            }
        }
    }
    return true;
}

Outcome criterion1() {
    const auto b = betti(t::kite());
    return {b == std::vector<int>{1, 6, 9, 4}, "betti = " + join(b)};
}

Outcome criterion2() {
    const auto f0 = build_F0(t::kite());
    const std::set<std::string> generators{"x_1^3", "x_2^2", "x_3^2", "x_1^2*x_2", "x_1^2*x_3", "x_1*x_2*x_3"};
    const bool first = exact_entries(f0.differential(1)) == generators;
    const bool rest = match_signed_permutation(f0.differentials, t::kite_F0()).has_value();
    return {first && rest, std::string("delta_1 entry set ") + (first ? "equal" : "differs") +
                               ", delta_1..3 " + (rest ? "match" : "do not match") + " up to signed permutation"};
}

Outcome criterion3() {
    const auto g = t::kite();
    const auto f1 = build_F1(g);
    const auto reference = t::kite_F1();
    const bool first = entries_up_to_sign(f1.differential(1)) == entries_up_to_sign(reference[0]) &&
                       f1.differential(1).entries().size() == 6;
    std::string why;
    bool bridges = binomials_at_bridges(g, f1, why);
    for (const auto& h : t::random_multigraphs(20, 5, 3))
        if (bridges) bridges = binomials_at_bridges(h, build_F1(h), why);
    const bool all = match_signed_permutation(f1.differentials, reference).has_value();
    std::string detail = std::string("delta_1 binomials ") + (first ? "equal up to sign" : "differ") +
                         ", binomials " + (bridges ? "exactly at bridges" : "off bridges: " + why) +
                         ", delta_1..3 " + (all ? "match" : "do not match") + " up to signed permutation";
    return {first && bridges && all, detail};
}

Outcome criterion4() {
    const auto g = t::kite();
    const auto f0 = build_F0(g);
    const auto f1 = build_F1(g);
    try {
        const auto w = validate_weight_vector(g, {5, 6, 5, 2}, 2);
        const auto ft = build_Ft(g, w);
        const bool match = match_signed_permutation(ft.differentials, t::kite_Ft()).has_value();
        const bool fibers = fibers_reproduce(ft, f0, f1);
        return {match && fibers, std::string("lambda=(5,6,5,2), t weight 2: ") + (match ? "matrices match" : "matrices differ") +
                                     ", fibers " + (fibers ? "reproduce F0 and F1" : "differ")};
    } catch (const Error& e) {
        return {false, std::string("lambda=(5,6,5,2), t weight 2: ") + e.what()};
    }
}

void criterion4_info() {
    const auto g = t::kite();
    const auto w = weight_vector(g);
    const auto ft = build_Ft(g, w);
    const bool match = match_signed_permutation(ft.differentials, t::kite_Ft()).has_value();
    const bool fibers = fibers_reproduce(ft, build_F0(g), build_F1(g));
    std::cout << "  info: default lambda=(";
    for (std::size_t i = 0; i < w.lambda.size(); ++i) std::cout << (i ? "," : "") << w.lambda[i];
    std::cout << "), t weight " << w.t_weight << ": reference Ft matrices " << (match ? "match" : "do not match")
              << " up to signed permutation; t:=0 and t:=1 " << (fibers ? "reproduce" : "do not reproduce")
              << " F0 and F1 entrywise\n";
}

Outcome criterion5() {
    const auto d = jstar_decompose(t::kite(), 0);
    const std::map<std::pair<int, int>, int> expected{{{3, 3}, 1}, {{3, 2}, 3}, {{2, 2}, 4}, {{1, 2}, 1}};
    const bool shape = d.multiplicity == expected;
    const bool dims = d.dimensions == std::vector<int>{1, 6, 9, 4};
    std::ostringstream detail;
    detail << "summands";
    for (const auto& [key, count] : d.multiplicity) detail << ' ' << count << "x(deg " << key.first << ", " << key.second << " vertices)";
    detail << ", dimensions by degree 3..0 = " << d.dimensions[3] << ' ' << d.dimensions[2] << ' ' << d.dimensions[1] << ' '
           << d.dimensions[0] << (d.ok() ? ", decomposition verified" : ", decomposition check failed");
    return {shape && dims && d.ok(), detail.str()};
}

Outcome criterion6() {
    int failures = 0;
    for (const auto& g : corpus())
        if (betti(g) != betti_oracle(g).totals) ++failures;
    return {failures == 0, std::to_string(corpus().size()) + " graphs, " + std::to_string(failures) + " mismatches"};
}

Outcome criterion7() {
    int dd = 0, strands = 0, generic = 0, stars = 0, checked_strands = 0;
    for (const auto& g : corpus()) {
        const auto f0 = build_F0(g);
        const auto f1 = build_F1(g);
        std::vector<const FreeComplex*> complexes{&f0, &f1};
        std::optional<FreeComplex> ft;
        if (g.size() >= 2) {
            ft = build_Ft(g, weight_vector(g));
            complexes.push_back(&*ft);
        }
        for (const auto* f : complexes) {
            if (!check_dd_zero(*f)) ++dd;
            if (!generic_exactness(*f).ok) ++generic;
        }
        for (const auto& r : strand_exactness_F0(g, f0)) {
            ++checked_strands;
            if (!r.ok) ++strands;
        }
        const auto b = betti(g);
        for (Vertex j = 0; j + 1 < g.size(); ++j)
            if (star_betti_formula(g, j) != b) ++stars;
    }
    std::ostringstream detail;
    detail << corpus().size() << " graphs: d^2 failures " << dd << ", strand failures " << strands << " of "
           << checked_strands << ", generic failures " << generic << ", star formula failures " << stars;
    return {dd == 0 && strands == 0 && generic == 0 && stars == 0, detail.str()};
}

Outcome criterion8() {
    int trees = 0, failures = 0;
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> binomial{1};
        for (int k = 1; k < n; ++k) binomial.push_back(binomial.back() * (n - k) / k);
        for (const auto& tree : t::all_trees(n)) {
            ++trees;
            const auto report = special_case_checks(tree);
            if (!report.tree_checked || !report.tree_ok || betti(tree) != binomial) ++failures;
        }
    }
    bool saturated = true;
    for (int n : {4, 5}) {
        const auto report = special_case_checks(t::complete(n));
        saturated = saturated && report.saturated_checked && report.saturated_ok;
    }
    return {failures == 0 && saturated, std::to_string(trees) + " trees, " + std::to_string(failures) +
                                             " failures; K4 and K5 " + (saturated ? "pass" : "fail") + " the saturated check"};
}

Outcome criterion9() {
    int lcm = 0, acyclic = 0, spheres = 0, graphs = 0, joins = 0;
    for (const auto& g : corpus()) {
        if (g.size() < 2) continue;
        ++graphs;
        const auto p = build_part(g);
        if (!check_label_lcm(p)) ++lcm;
        const auto a = check_cellular_acyclicity(p);
        joins += a.checked;
        if (!a.ok()) ++acyclic;
        if (!check_boundary_spheres(p).ok()) ++spheres;
    }
    std::ostringstream detail;
    detail << graphs << " graphs with n >= 2, " << joins << " label joins: lcm failures " << lcm
           << ", acyclicity failures " << acyclic << ", sphere failures " << spheres;
    return {lcm == 0 && acyclic == 0 && spheres == 0, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, 1, criterion1},   {2, 1, criterion2},   {3, 1, criterion3},   {4, 1, criterion4},  {5, 1, criterion5},
        {6, 120, criterion6}, {7, 300, criterion7}, {8, 30, criterion8}, {9, 180, criterion9},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > 9) {
            std::cerr << "usage: acceptance [criterion 1-9 ...]\n";
            return 2;
        }
        selected.insert(n);
    }

    bool all_pass = true;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.number)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.limit_seconds;
        const bool pass = outcome.pass && in_time;
        all_pass = all_pass && pass;
        std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  (" << std::fixed
                  << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0) << c.limit_seconds
                  << " s)  " << outcome.detail << (in_time ? "" : "  [over time limit]") << '\n';
        if (c.number == 4) criterion4_info();
    }
    return all_pass ? 0 : 1;
}
