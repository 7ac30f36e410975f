#include "chipres/verification.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>

#include "chipres/linalg.hpp"

namespace chipres {

namespace {

int constant_sign(const Polynomial& p) {
    if (!p.is_monomial()) throw Error("expected a single signed term, got " + p.to_string());
    return p.terms().begin()->second > 0 ? 1 : -1;
}

struct SignEntry {
    int row;
    int col;
    int sign;
};

std::vector<SignEntry> sign_entries(const PolyMatrix& m) {
    std::vector<SignEntry> out;
    for (const auto& [rc, p] : m.entries()) out.push_back({rc.first, rc.second, constant_sign(p)});
    return out;
}

// Rank of the +-1 matrix restricted to the selected rows and columns.
int restricted_rank(const std::vector<SignEntry>& entries, const std::vector<char>& rows, const std::vector<char>& cols) {
    std::map<int, SparseRow> by_row;
    for (const auto& e : entries)
        if (rows[e.row] && cols[e.col]) by_row[e.row].emplace_back(e.col, mpz_class(e.sign));
    std::vector<SparseRow> mat;
    for (auto& [r, row] : by_row) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        mat.push_back(std::move(row));
    }
    return rank_exact(std::move(mat));
}

Arc find_arc(const AcyclicPartition& c, Vertex tail_vertex, Vertex head_vertex) {
    return {c.block_of(tail_vertex), c.block_of(head_vertex)};
}

}  // namespace

// ---------------------------------------------------------------------------

bool check_dd_zero(const FreeComplex& f) {
    for (int k = 2; k <= f.length(); ++k)
        if (!mat_mul(f.differential(k - 1), f.differential(k)).is_zero()) return false;
    return true;
}

bool check_minimal(const FreeComplex& f) {
    for (const auto& d : f.differentials)
        for (const auto& [rc, p] : d.entries())
            if (p.constant_term() != 0) return false;
    return true;
}

bool check_class_multidegrees(const Multigraph& g, const FreeComplex& f) {
    for (int k = 1; k <= f.length(); ++k)
        for (const auto& [rc, p] : f.differential(k).entries()) {
            const Divisor& source = f.modules[k][rc.second].multidegree;
            const Divisor& target = f.modules[k - 1][rc.first].multidegree;
            for (const auto& [m, c] : p.terms()) {
                Divisor shifted = target;
                for (int i = 0; i < g.size(); ++i) shifted[i] += m.exponent(i);
                if (!linearly_equivalent(g, shifted, source)) return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------

std::vector<Monomial> parking_generators_bruteforce(const Multigraph& g) {
    const int n = g.size();
    std::vector<Monomial> all;
    for (VertexSet s = 1; s < singleton(n - 1); ++s) {
        const VertexSet rest = g.all_vertices() & ~s;
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (Vertex u : members(s)) e[u] = g.cut_weight(singleton(u), rest);
        all.emplace_back(std::move(e));
    }
    std::sort(all.begin(), all.end(), GradedLexGreater{});
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<Monomial> minimal;
    for (const auto& m : all) {
        const bool redundant = std::any_of(all.begin(), all.end(), [&](const Monomial& o) { return o != m && o.divides(m); });
        if (!redundant) minimal.push_back(m);
    }
    return minimal;
}

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& generators) {
    return std::any_of(generators.begin(), generators.end(), [&](const Monomial& gen) { return gen.divides(m); });
}

std::vector<Monomial> lcm_closure(const std::vector<Monomial>& generators) {
    std::set<Monomial> seen(generators.begin(), generators.end());
    std::vector<Monomial> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& m : frontier)
            for (const auto& gen : generators) {
                Monomial l = m.lcm(gen);
                if (seen.insert(l).second) next.push_back(std::move(l));
            }
        frontier = std::move(next);
    }
    std::vector<Monomial> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), GradedLexGreater{});
    return out;
}

// ---------------------------------------------------------------------------

std::vector<StrandReport> strand_exactness_F0(const Multigraph& g) { return strand_exactness_F0(g, build_F0(g)); }

std::vector<StrandReport> strand_exactness_F0(const Multigraph& g, const FreeComplex& f0) {
    const int n = g.size();
    const int len = f0.length();
    const auto generators = parking_generators_bruteforce(g);

    std::vector<std::vector<SignEntry>> entries(static_cast<std::size_t>(len) + 1);
    for (int k = 1; k <= len; ++k) entries[k] = sign_entries(f0.differential(k));

    std::vector<std::int64_t> join(static_cast<std::size_t>(n), 0);
    for (const auto& mod : f0.modules)
        for (const auto& e : mod)
            for (int i = 0; i < n; ++i) join[i] = std::max(join[i], e.multidegree[i]);

    std::unordered_map<std::string, std::vector<int>> cache;
    std::vector<StrandReport> reports;
    Divisor b(n);
    for (;;) {
        std::vector<std::vector<char>> included(f0.modules.size());
        std::string key;
        for (std::size_t k = 0; k < f0.modules.size(); ++k)
            for (const auto& e : f0.modules[k]) {
                const char in = e.multidegree.dominated_by(b) ? 1 : 0;
                included[k].push_back(in);
                key += static_cast<char>('0' + in);
            }
        auto it = cache.find(key);
        if (it == cache.end()) {
            std::vector<int> ranks(static_cast<std::size_t>(len) + 2, 0);  // ranks[k] = rank delta_k
            for (int k = 1; k <= len; ++k) ranks[k] = restricted_rank(entries[k], included[k - 1], included[k]);
            std::vector<int> h;
            for (int k = 0; k <= len; ++k) {
                const int dim = static_cast<int>(std::count(included[k].begin(), included[k].end(), 1));
                h.push_back(dim - ranks[k] - ranks[k + 1]);
            }
            it = cache.emplace(std::move(key), std::move(h)).first;
        }
        StrandReport rep;
        rep.multidegree = b;
        rep.homology = it->second;
        rep.in_ideal = in_monomial_ideal(monomial_of_divisor(b), generators);
        rep.ok = rep.homology[0] == (rep.in_ideal ? 0 : 1) &&
                 std::all_of(rep.homology.begin() + 1, rep.homology.end(), [](int h) { return h == 0; });
        reports.push_back(std::move(rep));

        int i = 0;
        while (i < n && b[i] == join[i]) b[i++] = 0;
        if (i == n) break;
        ++b[i];
    }
    return reports;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CHIPRES_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(std::string("CHIPRES_SEED is not an integer: ") + env);
        }
    }
    return 20240611;
}

GenericReport generic_exactness(const FreeComplex& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(2, 10000);
    Assignment point;
    for (int i = 0; i < f.n; ++i) point.x.emplace_back(mpq_class(dist(rng)));
    point.t = 1;

    GenericReport rep;
    for (const auto& d : f.differentials) rep.differential_ranks.push_back(rank_exact(evaluate(d, point)));
    rep.ok = true;
    for (int k = 1; k <= f.length(); ++k) {
        const int in = rep.differential_ranks[k - 1];
        const int out = k < f.length() ? rep.differential_ranks[k] : 0;
        if (in + out != f.rank(k)) rep.ok = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------

OracleResult betti_oracle(const Multigraph& g) {
    const int n = g.size();
    OracleResult out;
    out.totals.assign(static_cast<std::size_t>(n), 0);
    out.totals[0] = 1;
    out.graded.emplace(Monomial{}, std::vector<int>{1});
    const auto generators = parking_generators_bruteforce(g);
    if (generators.empty()) return out;

    for (const Monomial& b : lcm_closure(generators)) {
        std::vector<int> support;
        for (int i = 0; i < n; ++i)
            if (b.exponent(i) > 0) support.push_back(i);
        const int s = static_cast<int>(support.size());
        // Faces of the upper Koszul complex, as subsets of the support.
        std::vector<char> face(std::size_t{1} << s, 0);
        for (std::uint32_t mask = 0; mask < face.size(); ++mask) {
            std::vector<int> e = b.exponents();
            for (int i = 0; i < s; ++i)
                if ((mask >> i) & 1u) --e[support[i]];
            face[mask] = in_monomial_ideal(Monomial(e), generators);
        }
        // Reduced chain complex: dimension d holds faces with d+1 vertices.
        std::vector<int> rank_boundary(static_cast<std::size_t>(s) + 2, 0);  // rank of d -> d-1, index d+1
        std::vector<int> dim(static_cast<std::size_t>(s) + 1, 0);            // index d+1
        for (std::uint32_t mask = 0; mask < face.size(); ++mask)
            if (face[mask]) ++dim[std::popcount(mask)];
        for (int size = 1; size <= s; ++size) {
            std::vector<SparseRow> rows;
            for (std::uint32_t mask = 0; mask < face.size(); ++mask) {
                if (!face[mask] || std::popcount(mask) != size) continue;
                SparseRow row;
                int position = 0;
                for (int i = 0; i < s; ++i) {
                    if (!((mask >> i) & 1u)) continue;
                    const std::uint32_t sub = mask & ~(1u << i);
                    if (face[sub]) row.emplace_back(static_cast<int>(sub), mpz_class(position % 2 ? -1 : 1));
                    ++position;
                }
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
                if (!row.empty()) rows.push_back(std::move(row));
            }
            rank_boundary[size] = rank_exact(std::move(rows));
        }
        std::vector<int> graded;
        for (int size = 0; size <= s; ++size) {
            const int h = dim[size] - rank_boundary[size] - (size + 1 <= s ? rank_boundary[size + 1] : 0);
            const int i = size + 1;  // reduced dimension size-1 gives homological degree size+1
            if (h == 0) continue;
            if (i >= static_cast<int>(out.totals.size())) out.totals.resize(static_cast<std::size_t>(i) + 1, 0);
            out.totals[i] += h;
            if (static_cast<int>(graded.size()) <= i) graded.resize(static_cast<std::size_t>(i) + 1, 0);
            graded[i] = h;
        }
        if (!graded.empty()) out.graded.emplace(b, std::move(graded));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Arc> j_edges(const Multigraph& g, const AcyclicPartition& c, Vertex j) {
    std::vector<Arc> out;
    const int jb = c.block_of(j);
    for (const Arc& a : contractible_edges(c)) {
        if (a.tail != jb) continue;
        bool only_j = true;
        for (Vertex u : members(c.blocks[a.tail]))
            if (u != j && g.cut_weight(singleton(u), c.blocks[a.head]) > 0) only_j = false;
        if (only_j) out.push_back(a);
    }
    return out;
}

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

StarDecomposition jstar_decompose(const Multigraph& g, Vertex j) {
    const int n = g.size();
    if (j < 0 || j >= n - 1) throw Error("star center must be a non-sink vertex");
    StarDecomposition out;
    out.j = j;
    const FreeComplex f0 = build_F0(g);
    const int len = f0.length();

    std::vector<std::map<AcyclicPartition, int>> index(static_cast<std::size_t>(len) + 1);
    for (int k = 0; k <= len; ++k)
        for (int i = 0; i < f0.rank(k); ++i) index[k].emplace(f0.modules[k][i].key, i);

    std::set<AcyclicPartition> refined;
    for (int k = 1; k <= len; ++k)
        for (const auto& e : f0.modules[k])
            for (const Arc& a : j_edges(g, e.key, j)) refined.insert(contract(e.key, a));

    // Expected specialized differentials and the basis map.
    std::vector<std::map<std::pair<int, int>, int>> expected(static_cast<std::size_t>(len) + 1);
    std::vector<std::vector<int>> hits(static_cast<std::size_t>(len) + 1);
    for (int k = 0; k <= len; ++k) hits[k].assign(static_cast<std::size_t>(f0.rank(k)), 0);
    out.dimensions.assign(static_cast<std::size_t>(len) + 1, 0);
    out.matrices_match = true;
    out.summands_exact = true;

    for (int r = 0; r <= len; ++r) {
        for (const auto& e : f0.modules[r]) {
            if (refined.count(e.key)) continue;
            StarSummand summand{r, e.key, j_edges(g, e.key, j)};
            const int edges = static_cast<int>(summand.edges.size());
            std::vector<Vertex> heads;
            for (const Arc& a : summand.edges) heads.push_back(min_vertex(e.key.blocks[a.head]));

            // Contract each subset of star edges; remember where each lands.
            std::vector<AcyclicPartition> contracted(std::size_t{1} << edges);
            std::vector<int> position(contracted.size(), -1);
            bool valid = true;
            for (std::uint32_t mask = 0; mask < contracted.size() && valid; ++mask) {
                AcyclicPartition c = e.key;
                for (int i = 0; i < edges && valid; ++i) {
                    if (!((mask >> i) & 1u)) continue;
                    const Arc a = find_arc(c, j, heads[i]);
                    if (!is_contractible(c, a)) valid = false;
                    else c = contract(c, a);
                }
                if (!valid) break;
                const int degree = r - std::popcount(mask);
                auto it = index[degree].find(c);
                if (it == index[degree].end()) {
                    valid = false;
                    break;
                }
                position[mask] = it->second;
                ++hits[degree][it->second];
                ++out.dimensions[degree];
                contracted[mask] = std::move(c);
            }
            if (!valid) {
                out.matrices_match = false;
                out.summands_exact = false;
                out.summands.push_back(std::move(summand));
                continue;
            }

            // Star complex entries, written both into the global expectation
            // and into the summand's own complex.
            std::vector<std::vector<SignEntry>> local(static_cast<std::size_t>(edges) + 1);
            std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(edges) + 1);
            for (std::uint32_t mask = 0; mask < contracted.size(); ++mask) by_size[std::popcount(mask)].push_back(mask);
            auto local_index = [&](std::uint32_t mask) {
                const auto& v = by_size[std::popcount(mask)];
                return static_cast<int>(std::find(v.begin(), v.end(), mask) - v.begin());
            };
            for (std::uint32_t mask = 0; mask < contracted.size(); ++mask) {
                const AcyclicPartition& c = contracted[mask];
                const int degree = r - std::popcount(mask);
                for (int i = 0; i < edges; ++i) {
                    if ((mask >> i) & 1u) continue;
                    const Arc a = find_arc(c, j, heads[i]);
                    const int s = contraction_sign(c.blocks, a);
                    const std::uint32_t next = mask | (1u << i);
                    expected[degree][{position[next], position[mask]}] = s;
                    local[std::popcount(next)].push_back({local_index(next), local_index(mask), s});
                }
            }
            // Homology of the summand, indexed by number of contracted edges.
            for (int size = 0; size <= edges; ++size) {
                const int into = size < edges ? restricted_rank(local[size + 1], std::vector<char>(by_size[size + 1].size(), 1),
                                                                std::vector<char>(by_size[size].size(), 1))
                                              : 0;
                const int from = size > 0 ? restricted_rank(local[size], std::vector<char>(by_size[size].size(), 1),
                                                            std::vector<char>(by_size[size - 1].size(), 1))
                                          : 0;
                if (static_cast<int>(by_size[size].size()) - into - from != 0) out.summands_exact = false;
            }
            ++out.multiplicity[{r, summand.vertices()}];
            out.summands.push_back(std::move(summand));
        }
    }

    out.bijective = true;
    for (const auto& h : hits)
        for (int count : h)
            if (count != 1) out.bijective = false;

    Assignment point;
    point.x.assign(static_cast<std::size_t>(n), mpq_class(0));
    point.x[j] = 1;
    point.t = 0;
    for (int k = 1; k <= len; ++k) {
        const PolyMatrix specialized = f0.differential(k).substitute(point);
        std::map<std::pair<int, int>, int> actual;
        for (const auto& [rc, p] : specialized.entries()) {
            if (abs(p.constant_term()) != 1 || !p.is_monomial()) out.matrices_match = false;
            actual[rc] = p.constant_term() > 0 ? 1 : -1;
        }
        if (actual != expected[k]) out.matrices_match = false;
    }
    return out;
}

std::vector<int> star_betti_formula(const StarDecomposition& d, int n) {
    std::vector<int> beta(static_cast<std::size_t>(n), 0);
    for (const auto& [rs, q] : d.multiplicity) {
        const auto [r, s] = rs;
        for (int k = 0; k < n; ++k) beta[k] += static_cast<int>(q * binomial(s - 1, r - k));
    }
    return beta;
}

std::vector<int> star_betti_formula(const Multigraph& g, Vertex j) {
    return star_betti_formula(jstar_decompose(g, j), g.size());
}

// ---------------------------------------------------------------------------

DegenerationReport degeneration_fibers(const Multigraph& g) {
    if (g.size() < 2) {
        DegenerationReport r;
        r.built = r.zero_fiber = r.one_fiber = r.gaps = r.dd_zero = true;
        return r;
    }
    return degeneration_fibers(g, weight_vector(g));
}

DegenerationReport degeneration_fibers(const Multigraph& g, const WeightVector& w) {
    DegenerationReport rep;
    FreeComplex ft;
    try {
        ft = build_Ft(g, w);
        rep.built = true;
    } catch (const Error& e) {
        rep.error = e.what();
        return rep;
    }
    const FreeComplex f0 = build_F0(g);
    const FreeComplex f1 = build_F1(g);
    Assignment at0, at1;
    at0.t = 0;
    at1.t = 1;
    rep.zero_fiber = rep.one_fiber = true;
    for (int k = 1; k <= ft.length(); ++k) {
        if (ft.differential(k).substitute(at0) != f0.differential(k)) rep.zero_fiber = false;
        if (ft.differential(k).substitute(at1) != f1.differential(k)) rep.one_fiber = false;
    }
    rep.gaps = true;
    for (const auto& t : homogenization_terms(g, w))
        if ((t.gap == 0) != t.representative || t.gap < 0) rep.gaps = false;
    rep.dd_zero = check_dd_zero(ft);
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

class ParityUnionFind {
public:
    explicit ParityUnionFind(int n) : parent_(static_cast<std::size_t>(n)), parity_(static_cast<std::size_t>(n), 0) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    std::pair<int, int> find(int x) const {
        int p = 0;
        while (parent_[x] != x) {
            p ^= parity_[x];
            x = parent_[x];
        }
        return {x, p};
    }

    bool unite(int a, int b, int parity) {
        const auto [ra, pa] = find(a);
        const auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == parity;
        parent_[ra] = rb;
        parity_[ra] = pa ^ pb ^ parity;
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> parity_;
};

std::string up_to_sign(const Polynomial& p) {
    std::string a = p.to_string();
    std::string b = (-p).to_string();
    return std::min(a, b);
}

class SignedMatcher {
public:
    SignedMatcher(const std::vector<PolyMatrix>& ours, const std::vector<PolyMatrix>& theirs)
        : ours_(ours), theirs_(theirs) {}

    std::optional<SignedMatch> run() {
        if (ours_.size() != theirs_.size()) return std::nullopt;
        const int len = static_cast<int>(ours_.size());
        if (len == 0) return SignedMatch{};
        sizes_.push_back(ours_[0].rows());
        for (int k = 0; k < len; ++k) {
            if (ours_[k].rows() != theirs_[k].rows() || ours_[k].cols() != theirs_[k].cols()) return std::nullopt;
            if (k > 0 && ours_[k].rows() != ours_[k - 1].cols()) return std::nullopt;
            sizes_.push_back(ours_[k].cols());
        }
        int total = 0;
        for (int s : sizes_) {
            offsets_.push_back(total);
            total += s;
        }
        perm_.assign(sizes_.size(), {});
        if (!degree(0, ParityUnionFind(total))) return std::nullopt;
        SignedMatch m;
        m.permutation = perm_;
        for (std::size_t d = 0; d < sizes_.size(); ++d) {
            std::vector<int> s;
            for (int i = 0; i < sizes_[d]; ++i) s.push_back(final_uf_->find(offsets_[d] + i).second ? -1 : 1);
            m.signs.push_back(std::move(s));
        }
        return m;
    }

private:
    bool compatible(int d, int i, int j) const {
        if (d == 0) {
            auto sig = [](const PolyMatrix& m, int r) {
                std::vector<std::string> v;
                for (int c = 0; c < m.cols(); ++c) {
                    const Polynomial p = m.at(r, c);
                    if (!p.is_zero()) v.push_back(up_to_sign(p));
                }
                std::sort(v.begin(), v.end());
                return v;
            };
            return sig(ours_[0], i) == sig(theirs_[0], j);
        }
        const PolyMatrix& a = ours_[d - 1];
        const PolyMatrix& b = theirs_[d - 1];
        for (int r = 0; r < a.rows(); ++r) {
            const Polynomial x = a.at(r, i);
            const Polynomial y = b.at(perm_[d - 1][r], j);
            if (!(x == y || x == -y)) return false;
        }
        return true;
    }

    bool degree(int d, const ParityUnionFind& uf) {
        if (d == static_cast<int>(sizes_.size())) {
            final_uf_ = uf;
            return true;
        }
        const int size = sizes_[d];
        std::vector<std::vector<int>> cand(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                if (compatible(d, i, j)) cand[i].push_back(j);
        perm_[d].assign(static_cast<std::size_t>(size), -1);
        std::vector<char> used(static_cast<std::size_t>(size), 0);
        return assign(d, 0, cand, used, uf);
    }

    bool assign(int d, int i, const std::vector<std::vector<int>>& cand, std::vector<char>& used, const ParityUnionFind& uf) {
        if (i == sizes_[d]) {
            ParityUnionFind next = uf;
            if (d > 0) {
                for (const auto& [rc, p] : ours_[d - 1].entries()) {
                    const Polynomial q = theirs_[d - 1].at(perm_[d - 1][rc.first], perm_[d][rc.second]);
                    if (!next.unite(offsets_[d - 1] + rc.first, offsets_[d] + rc.second, q == p ? 0 : 1)) return false;
                }
            }
            return degree(d + 1, next);
        }
        for (int j : cand[i]) {
            if (used[j]) continue;
            used[j] = 1;
            perm_[d][i] = j;
            if (assign(d, i + 1, cand, used, uf)) return true;
            used[j] = 0;
        }
        return false;
    }

    const std::vector<PolyMatrix>& ours_;
    const std::vector<PolyMatrix>& theirs_;
    std::vector<int> sizes_;
    std::vector<int> offsets_;
    std::vector<std::vector<int>> perm_;
    std::optional<ParityUnionFind> final_uf_;
};

}  // namespace

std::optional<SignedMatch> match_signed_permutation(const std::vector<PolyMatrix>& ours,
                                                    const std::vector<PolyMatrix>& theirs) {
    return SignedMatcher(ours, theirs).run();
}

std::vector<PolyMatrix> koszul_complex(const std::vector<Polynomial>& elements) {
    const int m = static_cast<int>(elements.size());
    std::vector<std::vector<std::uint32_t>> basis(static_cast<std::size_t>(m) + 1);
    for (std::uint32_t s = 0; s < (1u << m); ++s) basis[std::popcount(s)].push_back(s);
    std::vector<PolyMatrix> out;
    for (int k = 1; k <= m; ++k) {
        PolyMatrix d(static_cast<int>(basis[k - 1].size()), static_cast<int>(basis[k].size()));
        for (int col = 0; col < static_cast<int>(basis[k].size()); ++col) {
            const std::uint32_t s = basis[k][col];
            int position = 0;
            for (int i = 0; i < m; ++i) {
                if (!((s >> i) & 1u)) continue;
                const std::uint32_t sub = s & ~(1u << i);
                const auto& prev = basis[k - 1];
                const int row = static_cast<int>(std::find(prev.begin(), prev.end(), sub) - prev.begin());
                d.set(row, col, position % 2 ? -elements[i] : elements[i]);
                ++position;
            }
        }
        out.push_back(std::move(d));
    }
    return out;
}

SpecialCaseReport special_case_checks(const Multigraph& g) {
    SpecialCaseReport rep;
    const int n = g.size();
    if (g.is_tree()) {
        rep.tree_checked = true;
        // Parent of each vertex in the tree rooted at the sink.
        std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> queue{g.sink()};
        parent[g.sink()] = g.sink();
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex v : members(g.neighbours(queue[i])))
                if (parent[v] < 0) {
                    parent[v] = queue[i];
                    queue.push_back(v);
                }
        std::vector<Polynomial> gens;
        for (Vertex u = 0; u + 1 < n; ++u) gens.emplace_back(Monomial::variable(u, g.weight(u, parent[u])));
        const FreeComplex f0 = build_F0(g);
        rep.tree_ok = match_signed_permutation(f0.differentials, koszul_complex(gens)).has_value();
    }
    if (n >= 2 && g.is_saturated()) {
        rep.saturated_checked = true;
        rep.saturated_ok = true;
        for (int k = 2; k <= n && rep.saturated_ok; ++k)
            for (const auto& c : n_acyclic_partitions(g, k)) {
                const auto edges = contractible_edges(c);
                if (static_cast<int>(edges.size()) != k - 1) {
                    rep.saturated_ok = false;
                    break;
                }
                for (const Arc& e : edges) {
                    const AcyclicPartition ce = contract(c, e);
                    for (const Arc& f : edges) {
                        if (f == e) continue;
                        const Arc mapped = find_arc(ce, min_vertex(c.blocks[f.tail]), min_vertex(c.blocks[f.head]));
                        if (!is_contractible(ce, mapped)) rep.saturated_ok = false;
                    }
                }
            }
    }
    return rep;
}

}  // namespace chipres
