#include "chipres/cw_part.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "chipres/linalg.hpp"
#include "chipres/resolution.hpp"
#include "chipres/verification.hpp"

namespace chipres {

CWPoset build_part(const Multigraph& g) {
    if (g.size() < 2) throw Error("the cell poset needs at least two vertices");
    const FreeComplex f0 = build_F0(g);
    CWPoset p;
    p.n = g.size();
    p.levels.resize(f0.modules.size());
    for (int k = 0; k <= f0.length(); ++k)
        for (const auto& e : f0.modules[k]) p.levels[k].push_back({e.key, k - 1, monomial_of_divisor(e.multidegree), {}});
    for (int k = 1; k <= f0.length(); ++k)
        for (const auto& [rc, poly] : f0.differential(k).entries())
            p.levels[k][rc.second].facets.emplace_back(rc.first, poly.terms().begin()->second > 0 ? 1 : -1);
    return p;
}

bool check_label_lcm(const CWPoset& p) {
    for (std::size_t level = 2; level < p.levels.size(); ++level)
        for (const Cell& c : p.levels[level]) {
            Monomial l;
            for (const auto& [f, s] : c.facets) l = l.lcm(p.levels[level - 1][f].label);
            if (l != c.label) return false;
        }
    return true;
}

namespace {

using Selection = std::vector<std::vector<char>>;

// Reduced homology of the selected cells; an empty selection counts as acyclic.
std::vector<int> reduced_homology(const CWPoset& p, const Selection& sel) {
    const std::size_t levels = p.levels.size();
    std::vector<int> count(levels, 0);
    for (std::size_t l = 0; l < levels; ++l) count[l] = static_cast<int>(std::count(sel[l].begin(), sel[l].end(), 1));
    std::vector<int> h(levels, 0);
    if (std::all_of(count.begin() + 1, count.end(), [](int c) { return c == 0; })) return h;

    std::vector<int> rank(levels + 1, 0);  // rank[l]: boundary from level l to l-1
    for (std::size_t l = 1; l < levels; ++l) {
        std::vector<SparseRow> rows;
        for (std::size_t i = 0; i < p.levels[l].size(); ++i) {
            if (!sel[l][i]) continue;
            SparseRow row;
            for (const auto& [f, s] : p.levels[l][i].facets)
                if (sel[l - 1][f]) row.emplace_back(f, mpz_class(s));
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            if (!row.empty()) rows.push_back(std::move(row));
        }
        rank[l] = rank_exact(std::move(rows));
    }
    for (std::size_t l = 0; l < levels; ++l) h[l] = count[l] - rank[l] - rank[l + 1];
    return h;
}

Selection below(const CWPoset& p, const Monomial& b) {
    Selection sel(p.levels.size());
    for (std::size_t l = 0; l < p.levels.size(); ++l)
        for (const Cell& c : p.levels[l]) sel[l].push_back(c.label.divides(b) ? 1 : 0);
    return sel;
}

// Closed down-set of a cell, over all levels.
Selection closure(const CWPoset& p, int level, int index) {
    Selection sel(p.levels.size());
    for (std::size_t l = 0; l < p.levels.size(); ++l) sel[l].assign(p.levels[l].size(), 0);
    sel[level][index] = 1;
    for (int l = level; l >= 1; --l)
        for (std::size_t i = 0; i < p.levels[l].size(); ++i)
            if (sel[l][i])
                for (const auto& [f, s] : p.levels[l][i].facets) sel[l - 1][f] = 1;
    return sel;
}

std::string key_of(const Selection& sel) {
    std::string key;
    for (const auto& level : sel)
        for (char c : level) key += static_cast<char>('0' + c);
    return key;
}

}  // namespace

std::vector<int> reduced_homology_below(const CWPoset& p, const Monomial& b) { return reduced_homology(p, below(p, b)); }

AcyclicityReport check_cellular_acyclicity(const CWPoset& p) {
    AcyclicityReport rep;
    std::vector<Monomial> vertex_labels;
    for (const Cell& c : p.cells(0)) vertex_labels.push_back(c.label);
    std::map<std::string, bool> cache;
    for (const Monomial& b : lcm_closure(vertex_labels)) {
        ++rep.checked;
        const Selection sel = below(p, b);
        const std::string key = key_of(sel);
        auto it = cache.find(key);
        if (it == cache.end()) {
            const auto h = reduced_homology(p, sel);
            it = cache.emplace(key, std::all_of(h.begin(), h.end(), [](int x) { return x == 0; })).first;
        }
        if (!it->second) rep.failures.push_back(b);
    }
    return rep;
}

SphereReport check_boundary_spheres(const CWPoset& p) {
    SphereReport rep;
    for (int level = 2; level < static_cast<int>(p.levels.size()); ++level)
        for (int i = 0; i < static_cast<int>(p.levels[level].size()); ++i) {
            ++rep.checked;
            Selection sel = closure(p, level, i);
            sel[level][i] = 0;
            sel[0].assign(sel[0].size(), 1);
            const auto h = reduced_homology(p, sel);
            // A (k-1)-sphere, k = level - 1, has one class in dimension k-1, at level k.
            for (int l = 0; l < static_cast<int>(h.size()); ++l)
                if (h[l] != (l == level - 1 ? 1 : 0)) {
                    rep.failures.emplace_back(level - 1, i);
                    break;
                }
        }
    return rep;
}

bool check_meets(const CWPoset& p) {
    const int levels = static_cast<int>(p.levels.size());
    // Down-sets without the empty cell, keyed by (level, index).
    std::vector<std::vector<Selection>> down(static_cast<std::size_t>(levels));
    for (int l = 1; l < levels; ++l)
        for (int i = 0; i < static_cast<int>(p.levels[l].size()); ++i) {
            Selection s = closure(p, l, i);
            s[0].assign(s[0].size(), 0);
            down[l].push_back(std::move(s));
        }
    for (int l = 2; l < levels; ++l)
        for (int c = 0; c < static_cast<int>(p.levels[l].size()); ++c) {
            const Selection& faces = down[l][c];
            std::vector<std::pair<int, int>> members;
            for (int fl = 1; fl <= l; ++fl)
                for (int i = 0; i < static_cast<int>(faces[fl].size()); ++i)
                    if (faces[fl][i]) members.emplace_back(fl, i);
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    const Selection& da = down[members[a].first][members[a].second];
                    const Selection& db = down[members[b].first][members[b].second];
                    Selection common(static_cast<std::size_t>(levels));
                    int top = -1, top_index = -1, top_count = 0;
                    bool empty = true;
                    for (int fl = 0; fl < levels; ++fl) {
                        common[fl].resize(da[fl].size());
                        for (std::size_t i = 0; i < da[fl].size(); ++i) {
                            common[fl][i] = da[fl][i] && db[fl][i];
                            if (common[fl][i]) empty = false;
                        }
                    }
                    if (empty) continue;
                    // The meet must be the unique maximal cell and generate the intersection.
                    for (int fl = levels - 1; fl >= 1 && top < 0; --fl)
                        for (int i = 0; i < static_cast<int>(common[fl].size()); ++i)
                            if (common[fl][i]) {
                                if (top < 0) {
                                    top = fl;
                                    top_index = i;
                                }
                                ++top_count;
                            }
                    if (top_count != 1 || down[top][top_index] != common) return false;
                }
        }
    return true;
}

}  // namespace chipres
