#include "chipres/serialize.hpp"

#include <sstream>

namespace chipres {

Json to_json(const Multigraph& g) {
    Json edges = Json::array();
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.weight(u, v) > 0) edges.push_back({u + 1, v + 1, g.weight(u, v)});
    return {{"n", g.size()}, {"edges", edges}, {"sink", g.size()}};
}

Json to_json(const AcyclicPartition& c) {
    Json blocks = Json::array();
    for (VertexSet b : c.blocks) {
        Json block = Json::array();
        for (Vertex v : members(b)) block.push_back(v + 1);
        blocks.push_back(block);
    }
    Json arcs = Json::array();
    for (const Arc& a : c.arcs) arcs.push_back({a.tail, a.head});
    return {{"blocks", blocks}, {"arcs", arcs}};
}

AcyclicPartition partition_from_json(const Json& j) {
    AcyclicPartition c;
    for (const auto& block : j.at("blocks")) {
        VertexSet s = 0;
        for (const auto& v : block) {
            const int vertex = v.get<int>();
            if (vertex < 1 || vertex > kMaxVertices) throw Error("vertex out of range in partition");
            s |= singleton(vertex - 1);
        }
        c.blocks.push_back(s);
    }
    for (const auto& a : j.at("arcs")) {
        const Arc arc{a.at(0).get<int>(), a.at(1).get<int>()};
        if (arc.tail < 0 || arc.head < 0 || arc.tail >= c.size() || arc.head >= c.size())
            throw Error("arc references a missing block");
        c.arcs.push_back(arc);
    }
    return c;
}

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({c.get_str(), m.exponents(), m.t_exponent()});
    return terms;
}

Polynomial polynomial_from_json(const Json& j) {
    Polynomial p;
    for (const auto& term : j) {
        mpq_class c(term.at(0).get<std::string>());
        c.canonicalize();
        p += Polynomial(Monomial(term.at(1).get<std::vector<int>>(), term.at(2).get<int>()), c);
    }
    return p;
}

namespace {

Json divisor_json(const Divisor& d) { return d.values(); }

}  // namespace

Json to_json(const FreeComplex& f) {
    Json j;
    j["variant"] = to_string(f.variant);
    j["n"] = f.n;
    if (f.weights) j["weights"] = {{"lambda", f.weights->lambda}, {"y", f.weights->y}, {"t_weight", f.weights->t_weight}};
    Json modules = Json::array();
    for (const auto& mod : f.modules) {
        Json basis = Json::array();
        for (const auto& e : mod) {
            Json el = to_json(e.key);
            el["multidegree"] = divisor_json(e.multidegree);
            el["weight"] = e.weight;
            basis.push_back(el);
        }
        modules.push_back(basis);
    }
    j["modules"] = modules;
    Json diffs = Json::array();
    for (int k = 1; k <= f.length(); ++k) {
        const PolyMatrix& d = f.differential(k);
        Json entries = Json::array();
        for (const auto& [rc, p] : d.entries()) entries.push_back({rc.first, rc.second, to_json(p)});
        diffs.push_back({{"degree", k}, {"rows", d.rows()}, {"cols", d.cols()}, {"entries", entries}});
    }
    j["differentials"] = diffs;
    return j;
}

FreeComplex complex_from_json(const Json& j) {
    FreeComplex f;
    f.variant = variant_from_string(j.at("variant").get<std::string>());
    f.n = j.at("n").get<int>();
    if (j.contains("weights")) {
        const Json& w = j["weights"];
        f.weights = WeightVector{w.at("lambda").get<std::vector<std::int64_t>>(), w.at("y").get<std::vector<std::int64_t>>(),
                                 w.at("t_weight").get<int>()};
    }
    for (const auto& basis : j.at("modules")) {
        std::vector<BasisElement> mod;
        for (const auto& el : basis)
            mod.push_back({partition_from_json(el), Divisor(el.at("multidegree").get<std::vector<std::int64_t>>()),
                           el.at("weight").get<std::int64_t>()});
        f.modules.push_back(std::move(mod));
    }
    for (const auto& d : j.at("differentials")) {
        const int k = d.at("degree").get<int>();
        if (k != static_cast<int>(f.differentials.size()) + 1) throw Error("differentials out of order");
        PolyMatrix m(d.at("rows").get<int>(), d.at("cols").get<int>());
        if (k >= static_cast<int>(f.modules.size()) || m.rows() != f.rank(k - 1) || m.cols() != f.rank(k))
            throw Error("differential shape does not match the bases");
        for (const auto& e : d.at("entries")) m.set(e.at(0).get<int>(), e.at(1).get<int>(), polynomial_from_json(e.at(2)));
        f.differentials.push_back(std::move(m));
    }
    if (f.differentials.size() + 1 != f.modules.size() && !f.modules.empty())
        throw Error("complex has the wrong number of differentials");
    return f;
}

Json to_json(const CWPoset& p) {
    Json cells = Json::array();
    for (const auto& level : p.levels)
        for (std::size_t i = 0; i < level.size(); ++i) {
            const Cell& c = level[i];
            Json cell = to_json(c.partition);
            cell["dimension"] = c.dimension;
            cell["index"] = i;
            cell["label"] = c.label.to_string();
            Json facets = Json::array();
            for (const auto& [f, s] : c.facets) facets.push_back({f, s});
            cell["facets"] = facets;
            cells.push_back(cell);
        }
    return {{"n", p.n}, {"cells", cells}};
}

std::string to_text(const FreeComplex& f) {
    std::ostringstream out;
    out << to_string(f.variant) << " ranks";
    for (int r : f.ranks()) out << ' ' << r;
    out << '\n';
    if (f.weights) {
        out << "lambda";
        for (auto v : f.weights->lambda) out << ' ' << v;
        out << "  t-weight " << f.weights->t_weight << '\n';
    }
    for (int k = 0; k <= f.length(); ++k) {
        out << "\ndegree " << k << '\n';
        for (int i = 0; i < f.rank(k); ++i) {
            const auto& e = f.modules[k][i];
            out << "  [" << i << "] " << e.key.to_string() << "  " << e.multidegree.to_string();
            if (f.variant == Variant::Ft) out << "  weight " << e.weight;
            out << '\n';
        }
    }
    for (int k = 1; k <= f.length(); ++k) out << "\ndelta_" << k << " =\n" << f.differential(k).to_string();
    return out.str();
}

namespace {

std::string m2_monomial(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.exponents().size(); ++i) {
        const int e = m.exponents()[i];
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += "x_" + std::to_string(i + 1);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

std::string cas_script(const Multigraph& g, Ideal ideal, const WeightVector* w) {
    const int n = g.size();
    std::ostringstream out;
    out << "-- Macaulay2 session; run with: M2 --script <file>\n";
    if (ideal == Ideal::T && w) {
        out << "R = QQ[x_1..x_" << n << ", Weights => {";
        for (int i = 0; i < n; ++i) out << (i ? ", " : "") << w->lambda[i];
        out << "}];\n";
    } else {
        out << "R = QQ[x_1..x_" << n << "];\n";
    }
    // Firing each non-sink vertex gives a generating set for the lattice ideal after saturation.
    out << "firings = {";
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> nbr(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) nbr[j] = g.weight(i, j);
        out << (i ? ", " : "") << m2_monomial(Monomial::variable(i, g.degree(i))) << " - " << m2_monomial(Monomial(nbr));
    }
    out << "};\n";
    out << "IG = saturate(ideal(" << (n > 1 ? "firings" : "0_R") << "), product gens R);\n";
    out << "MG = monomialIdeal(";
    std::vector<Monomial> gens;
    for (VertexSet s = 1; n > 1 && s < singleton(n - 1); ++s) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (Vertex u : members(s)) e[u] = g.cut_weight(singleton(u), g.all_vertices() & ~s);
        gens.emplace_back(std::move(e));
    }
    if (gens.empty()) out << "0_R";
    for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? ", " : "") << m2_monomial(gens[i]);
    out << ");\n";
    switch (ideal) {
        case Ideal::MG: out << "print betti res MG;\n"; break;
        case Ideal::IG: out << "print betti res IG;\n"; break;
        case Ideal::T:
            out << "print betti res IG;\n";
            out << "print betti res monomialIdeal leadTerm IG;\n";
            out << "print (monomialIdeal leadTerm IG == MG);\n";
            break;
    }
    return out.str();
}

}  // namespace chipres
