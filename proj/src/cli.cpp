#include "chipres/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "chipres/cw_part.hpp"
#include "chipres/resolution.hpp"
#include "chipres/serialize.hpp"
#include "chipres/verification.hpp"

namespace chipres {

namespace {

std::string read_source(const std::string& source) {
    if (source == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(source);
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    // Not a readable file: treat as inline graph text.
    return source;
}

std::vector<std::int64_t> parse_lambda(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error("bad weight vector entry '" + item + "'");
        }
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

struct VerifySelection {
    bool all = false, complex = false, strands = false, generic = false, oracle = false, stars = false,
         degeneration = false, special = false;
};

bool run_verify(const Multigraph& g, VerifySelection sel, std::uint64_t seed, std::ostream& out) {
    if (!(sel.complex || sel.strands || sel.generic || sel.oracle || sel.stars || sel.degeneration || sel.special))
        sel.all = true;
    if (sel.all) sel.complex = sel.strands = sel.generic = sel.oracle = sel.stars = sel.degeneration = sel.special = true;

    bool ok = true;
    auto report = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out << name << ": " << verdict(pass) << (detail.empty() ? "" : "  " + detail) << '\n';
        ok = ok && pass;
    };

    const FreeComplex f0 = build_F0(g);
    const FreeComplex f1 = build_F1(g);
    std::optional<FreeComplex> ft;
    if (g.size() >= 2 && (sel.complex || sel.generic)) ft = build_Ft(g, weight_vector(g));

    if (sel.complex) {
        report("dd-zero F0", check_dd_zero(f0));
        report("dd-zero F1", check_dd_zero(f1));
        if (ft) report("dd-zero Ft", check_dd_zero(*ft));
        report("minimal F0", check_minimal(f0));
        report("minimal F1", check_minimal(f1));
        report("F1 class multidegrees", check_class_multidegrees(g, f1));
        report("ranks F0 = F1", f0.ranks() == f1.ranks(), join(f0.ranks()));
    }
    if (sel.strands) {
        const auto reports = strand_exactness_F0(g, f0);
        int bad = 0;
        for (const auto& r : reports)
            if (!r.ok) ++bad;
        report("strands F0", bad == 0, std::to_string(reports.size()) + " multidegrees, " + std::to_string(bad) + " failing");
    }
    if (sel.generic) {
        const auto r0 = generic_exactness(f0, seed);
        const auto r1 = generic_exactness(f1, seed);
        report("generic F0", r0.ok, "ranks " + join(r0.differential_ranks));
        report("generic F1", r1.ok, "ranks " + join(r1.differential_ranks));
        if (ft) {
            const auto rt = generic_exactness(*ft, seed);
            report("generic Ft", rt.ok, "ranks " + join(rt.differential_ranks));
        }
    }
    if (sel.oracle) {
        const auto b = betti(g);
        const auto o = betti_oracle(g).totals;
        report("betti oracle", b == o, "partitions " + join(b) + " / oracle " + join(o));
    }
    if (sel.stars) {
        const auto b = betti(g);
        for (Vertex j = 0; j + 1 < g.size(); ++j) {
            const auto d = jstar_decompose(g, j);
            const auto formula = star_betti_formula(d, g.size());
            report("stars j=" + std::to_string(j + 1), d.ok() && formula == b, "formula " + join(formula));
        }
    }
    if (sel.degeneration) {
        const auto d = degeneration_fibers(g);
        report("degeneration", d.ok(), d.error);
    }
    if (sel.special) {
        const auto s = special_case_checks(g);
        std::string detail;
        if (s.tree_checked) detail += "tree/Koszul ";
        if (s.saturated_checked) detail += "saturated ";
        if (detail.empty()) detail = "not applicable";
        report("special cases", s.ok(), detail);
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal free resolutions of chip-firing ideals of graphs", "chipres"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<int> sink;
    std::optional<std::uint64_t> seed;
    std::string output;
    app.add_option("--sink", sink, "1-based sink vertex, relabelled to the last vertex");
    app.add_option("--seed", seed, "seed for generic points (default: CHIPRES_SEED or a fixed value)");
    app.add_option("-o,--output", output, "write output to this file");

    std::string graph_source;
    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("graph", graph_source, "graph file, '-' for stdin, or inline edge list")->required();
    };

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers from n-acyclic partitions");
    add_graph(betti_cmd);
    bool check_oracle = false;
    betti_cmd->add_flag("--check-oracle", check_oracle, "compare with the monomial ideal oracle");

    auto* gens_cmd = app.add_subcommand("generators", "minimal generators of the parking function ideal");
    add_graph(gens_cmd);

    auto* resolve_cmd = app.add_subcommand("resolve", "build a resolution");
    add_graph(resolve_cmd);
    std::string ideal = "mg", format = "text", lambda_text;
    int t_weight = 1;
    resolve_cmd->add_option("--ideal", ideal, "mg, ig or t")->check(CLI::IsMember({"mg", "ig", "t"}));
    resolve_cmd->add_option("--lambda", lambda_text, "comma-separated weight vector for --ideal t");
    resolve_cmd->add_option("--t-weight", t_weight, "weight of t")->check(CLI::PositiveNumber);
    resolve_cmd->add_option("--format", format, "text, json or cas-script")
        ->check(CLI::IsMember({"text", "json", "cas-script"}));

    auto* parts_cmd = app.add_subcommand("partitions", "list n-acyclic k-partitions");
    add_graph(parts_cmd);
    int k = 0;
    bool classes = false;
    parts_cmd->add_option("-k", k, "number of blocks")->required();
    parts_cmd->add_flag("--classes", classes, "also list every member of each chip-firing class");

    auto* stars_cmd = app.add_subcommand("stars", "maximal j-star decomposition");
    add_graph(stars_cmd);
    int j = 0;
    stars_cmd->add_option("-j", j, "1-based star center")->required();

    auto* cw_cmd = app.add_subcommand("cw", "labeled cell poset as JSON");
    add_graph(cw_cmd);
    bool cw_check = false;
    cw_cmd->add_flag("--check", cw_check, "run the label, acyclicity and boundary checks instead");

    auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
    add_graph(verify_cmd);
    VerifySelection sel;
    verify_cmd->add_flag("--all", sel.all);
    verify_cmd->add_flag("--complex", sel.complex);
    verify_cmd->add_flag("--strands", sel.strands);
    verify_cmd->add_flag("--generic", sel.generic);
    verify_cmd->add_flag("--oracle", sel.oracle);
    verify_cmd->add_flag("--stars", sel.stars);
    verify_cmd->add_flag("--degeneration", sel.degeneration);
    verify_cmd->add_flag("--special", sel.special);

    std::vector<const char*> argv{"chipres"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run 'chipres --help' for usage\n";
        return 2;
    }

    std::ostringstream buf;
    int status = 0;
    try {
        const Multigraph g = parse_graph(read_source(graph_source), sink);
        const std::uint64_t chosen_seed = seed ? *seed : default_seed();

        if (betti_cmd->parsed()) {
            const auto b = betti(g);
            buf << join(b) << '\n';
            if (check_oracle) {
                const auto o = betti_oracle(g).totals;
                buf << "oracle " << join(o) << (o == b ? " (match)" : " (MISMATCH)") << '\n';
                if (o != b) status = 1;
            }
        } else if (gens_cmd->parsed()) {
            for (const auto& m : minimal_generators_MG(g)) buf << m.to_string() << '\n';
        } else if (resolve_cmd->parsed()) {
            if (!lambda_text.empty() && ideal != "t") throw Error("--lambda only applies to --ideal t");
            if (format == "cas-script") {
                std::optional<WeightVector> w;
                if (ideal == "t") w = lambda_text.empty() ? weight_vector(g) : validate_weight_vector(g, parse_lambda(lambda_text), t_weight);
                const Ideal which = ideal == "mg" ? Ideal::MG : ideal == "ig" ? Ideal::IG : Ideal::T;
                buf << cas_script(g, which, w ? &*w : nullptr);
            } else {
                FreeComplex f;
                if (ideal == "mg") {
                    f = build_F0(g);
                } else if (ideal == "ig") {
                    f = build_F1(g);
                } else {
                    WeightVector w = lambda_text.empty() ? weight_vector(g) : validate_weight_vector(g, parse_lambda(lambda_text), t_weight);
                    w.t_weight = t_weight;
                    f = build_Ft(g, w);
                }
                if (format == "json") buf << to_json(f).dump(2) << '\n';
                else buf << to_text(f);
            }
        } else if (parts_cmd->parsed()) {
            for (const auto& c : n_acyclic_partitions(g, k)) {
                buf << c.to_string() << "  " << divisor_of(g, c).to_string() << '\n';
                if (classes)
                    for (const auto& m : class_members(c))
                        if (m != c) buf << "    ~ " << m.to_string() << "  " << divisor_of(g, m).to_string() << '\n';
            }
        } else if (stars_cmd->parsed()) {
            const auto d = jstar_decompose(g, j - 1);
            const auto formula = star_betti_formula(d, g.size());
            const auto b = betti(g);
            buf << "center " << j << '\n';
            for (const auto& [rs, q] : d.multiplicity)
                buf << "  degree " << rs.first << ", " << rs.second << " vertices: " << q << '\n';
            buf << "dimensions " << join(d.dimensions) << '\n';
            buf << "star formula " << join(formula) << '\n';
            buf << "basis bijection " << verdict(d.bijective) << ", matrices " << verdict(d.matrices_match)
                << ", summands exact " << verdict(d.summands_exact) << ", formula " << verdict(formula == b) << '\n';
            if (!d.ok() || formula != b) status = 1;
        } else if (cw_cmd->parsed()) {
            const CWPoset p = build_part(g);
            if (cw_check) {
                const bool lcm = check_label_lcm(p);
                const auto acyc = check_cellular_acyclicity(p);
                const auto spheres = check_boundary_spheres(p);
                buf << "label lcm: " << verdict(lcm) << '\n';
                buf << "cellular acyclicity: " << verdict(acyc.ok()) << "  " << acyc.checked << " label joins\n";
                buf << "boundary spheres: " << verdict(spheres.ok()) << "  " << spheres.checked << " cells\n";
                if (!lcm || !acyc.ok() || !spheres.ok()) status = 1;
            } else {
                buf << to_json(p).dump(2) << '\n';
            }
        } else if (verify_cmd->parsed()) {
            if (!run_verify(g, sel, chosen_seed, buf)) status = 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (output.empty()) {
        out << buf.str();
    } else {
        std::ofstream file(output);
        if (!file) {
            err << "error: cannot write " << output << '\n';
            return 2;
        }
        file << buf.str();
    }
    return status;
}

}  // namespace chipres
