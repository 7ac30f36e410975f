#include "chipres/partitions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

namespace chipres {

namespace {

int find_block(const std::vector<VertexSet>& blocks, Vertex v) {
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        if (contains(blocks[i], v)) return i;
    return -1;
}

void sort_blocks(std::vector<VertexSet>& blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](VertexSet a, VertexSet b) { return min_vertex(a) < min_vertex(b); });
}

// Out-neighbour masks over block indices.
std::vector<std::uint32_t> out_masks(const AcyclicPartition& c) {
    std::vector<std::uint32_t> out(c.blocks.size(), 0);
    for (const Arc& a : c.arcs) out[a.tail] |= 1u << a.head;
    return out;
}

// Blocks reachable from `from` along arcs, skipping the direct arc `skip` when
// it starts at `from`.
std::uint32_t reachable(const std::vector<std::uint32_t>& out, int from, int skip_head = -1) {
    std::uint32_t start = out[from];
    if (skip_head >= 0) start &= ~(1u << skip_head);
    std::uint32_t seen = start, frontier = start;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= out[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

}  // namespace

int ConnectedPartition::block_of(Vertex v) const { return find_block(blocks, v); }
int AcyclicPartition::block_of(Vertex v) const { return find_block(blocks, v); }

std::vector<int> AcyclicPartition::out_degrees() const {
    std::vector<int> d(blocks.size(), 0);
    for (const Arc& a : arcs) ++d[a.tail];
    return d;
}

std::vector<int> AcyclicPartition::in_degrees() const {
    std::vector<int> d(blocks.size(), 0);
    for (const Arc& a : arcs) ++d[a.head];
    return d;
}

bool AcyclicPartition::has_arc(int tail, int head) const {
    return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.tail == tail && a.head == head; });
}

bool AcyclicPartition::is_acyclic() const {
    const auto out = out_masks(*this);
    for (int b = 0; b < size(); ++b)
        if ((reachable(out, b) >> b) & 1u) return false;
    return true;
}

bool AcyclicPartition::is_n_acyclic(Vertex sink) const {
    const int s = block_of(sink);
    const auto out = out_degrees();
    for (int b = 0; b < size(); ++b)
        if ((out[b] == 0) != (b == s)) return false;
    return is_acyclic();
}

std::string block_to_string(VertexSet s) {
    std::string out;
    const bool wide = s >> 9;
    for (Vertex v : members(s)) {
        if (wide && !out.empty()) out += ',';
        out += std::to_string(v + 1);
    }
    return out;
}

std::string AcyclicPartition::to_string() const {
    if (arcs.empty()) {
        std::string out = "[";
        for (std::size_t i = 0; i < blocks.size(); ++i) out += (i ? "|" : "") + block_to_string(blocks[i]);
        return out + "]";
    }
    std::string out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (i) out += ", ";
        out += block_to_string(blocks[arcs[i].tail]) + "->" + block_to_string(blocks[arcs[i].head]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<ConnectedPartition> connected_partitions(const Multigraph& g, int k) {
    const int n = g.size();
    if (k < 1 || k > n) throw Error("k out of range: " + std::to_string(k));
    std::vector<ConnectedPartition> out;
    std::vector<VertexSet> blocks;
    // The next block always contains the least unassigned vertex.
    std::function<void(VertexSet)> grow = [&](VertexSet unassigned) {
        const int remaining_blocks = k - static_cast<int>(blocks.size());
        if (unassigned == 0) {
            if (remaining_blocks == 0) out.push_back({blocks});
            return;
        }
        if (remaining_blocks == 0 || popcount(unassigned) < remaining_blocks) return;
        const Vertex v = min_vertex(unassigned);
        const VertexSet others = unassigned & ~singleton(v);
        // Iterate over all subsets of `others`.
        VertexSet sub = others;
        for (;;) {
            const VertexSet block = sub | singleton(v);
            const VertexSet rest = unassigned & ~block;
            if (popcount(rest) >= remaining_blocks - 1 && (rest != 0 || remaining_blocks == 1) &&
                g.induces_connected(block)) {
                blocks.push_back(block);
                grow(rest);
                blocks.pop_back();
            }
            if (sub == 0) break;
            sub = (sub - 1) & others;
        }
    };
    grow(g.all_vertices());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> quotient_order(const Multigraph& g, const ConnectedPartition& p) {
    const int s = p.block_of(g.sink());
    std::vector<int> order;
    for (int b = 0; b < p.size(); ++b)
        if (b != s) order.push_back(b);
    order.push_back(s);
    return order;
}

Multigraph quotient(const Multigraph& g, const ConnectedPartition& p) {
    const auto order = quotient_order(g, p);
    const int k = p.size();
    std::vector<std::vector<int>> w(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) w[i][j] = g.cut_weight(p.blocks[order[i]], p.blocks[order[j]]);
    return Multigraph(k, std::move(w));
}

std::vector<std::pair<int, int>> quotient_edges(const Multigraph& g, const std::vector<VertexSet>& blocks) {
    std::vector<std::pair<int, int>> edges;
    const int k = static_cast<int>(blocks.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.cut_weight(blocks[i], blocks[j]) > 0) edges.emplace_back(i, j);
    return edges;
}

namespace {

// Backtracking over edge orientations with incremental cycle detection. When
// `sink_block` >= 0 only orientations with a unique sink there are produced.
std::vector<AcyclicPartition> orientations(const Multigraph& g, const ConnectedPartition& p, int sink_block) {
    const auto edges = quotient_edges(g, p.blocks);
    const int k = p.size();
    const int m = static_cast<int>(edges.size());
    // Last edge index touching each block; once passed, the block's out-degree is final.
    std::vector<int> last(k, -1);
    for (int e = 0; e < m; ++e) last[edges[e].first] = last[edges[e].second] = e;

    std::vector<AcyclicPartition> out;
    std::vector<std::uint32_t> adj(k, 0);
    std::vector<Arc> arcs(m);
    std::vector<int> outdeg(k, 0);

    std::function<void(int)> step = [&](int e) {
        if (e == m) {
            if (sink_block >= 0) {
                for (int b = 0; b < k; ++b)
                    if (last[b] < 0 && b != sink_block) return;  // isolated block (k == 1 only)
            }
            out.push_back({p.blocks, arcs});
            return;
        }
        const auto [a, b] = edges[e];
        for (int dir = 0; dir < 2; ++dir) {
            const int tail = dir == 0 ? a : b;
            const int head = dir == 0 ? b : a;
            if (sink_block >= 0 && tail == sink_block) continue;
            // Adding tail->head closes a cycle iff head already reaches tail.
            if (tail == head || ((reachable(adj, head) >> tail) & 1u)) continue;
            adj[tail] |= 1u << head;
            ++outdeg[tail];
            arcs[e] = {tail, head};
            bool ok = true;
            if (sink_block >= 0) {
                for (int blk : {a, b})
                    if (last[blk] == e && blk != sink_block && outdeg[blk] == 0) ok = false;
            }
            if (ok) step(e + 1);
            adj[tail] &= ~(1u << head);
            --outdeg[tail];
        }
    };
    step(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<AcyclicPartition> acyclic_orientations(const Multigraph& g, const ConnectedPartition& p) {
    return orientations(g, p, -1);
}

std::vector<AcyclicPartition> n_acyclic_orientations(const Multigraph& g, const ConnectedPartition& p) {
    return orientations(g, p, p.block_of(g.sink()));
}

std::vector<AcyclicPartition> n_acyclic_partitions(const Multigraph& g, int k) {
    std::vector<AcyclicPartition> out;
    for (const auto& p : connected_partitions(g, k)) {
        auto part = n_acyclic_orientations(g, p);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Divisors and contraction

Divisor divisor_of(const Multigraph& g, const AcyclicPartition& c) {
    Divisor d(g.size());
    for (const Arc& a : c.arcs)
        for (Vertex u : members(c.blocks[a.tail])) d[u] += g.cut_weight(singleton(u), c.blocks[a.head]);
    return d;
}

bool is_contractible(const AcyclicPartition& c, Arc e) {
    if (!c.has_arc(e.tail, e.head)) return false;
    const auto out = out_masks(c);
    return !((reachable(out, e.tail, e.head) >> e.head) & 1u);
}

std::vector<Arc> contractible_edges(const AcyclicPartition& c) {
    const auto out = out_masks(c);
    std::vector<Arc> result;
    for (const Arc& a : c.arcs)
        if (!((reachable(out, a.tail, a.head) >> a.head) & 1u)) result.push_back(a);
    return result;
}

AcyclicPartition contract(const AcyclicPartition& c, Arc e) {
    if (!is_contractible(c, e)) throw Error("edge is not contractible");
    const VertexSet merged = c.blocks[e.tail] | c.blocks[e.head];
    std::vector<VertexSet> blocks;
    for (int b = 0; b < c.size(); ++b)
        if (b != e.tail && b != e.head) blocks.push_back(c.blocks[b]);
    blocks.push_back(merged);
    sort_blocks(blocks);
    std::vector<int> remap(c.blocks.size());
    for (int b = 0; b < c.size(); ++b) {
        const VertexSet target = (b == e.tail || b == e.head) ? merged : c.blocks[b];
        remap[b] = static_cast<int>(std::find(blocks.begin(), blocks.end(), target) - blocks.begin());
    }
    std::map<std::pair<int, int>, Arc> arcs;
    for (const Arc& a : c.arcs) {
        if (a == e) continue;
        const Arc mapped{remap[a.tail], remap[a.head]};
        arcs.emplace(std::minmax(mapped.tail, mapped.head), mapped);
    }
    AcyclicPartition out{std::move(blocks), {}};
    for (const auto& [key, arc] : arcs) out.arcs.push_back(arc);
    return out;
}

Divisor contraction_drop(const Multigraph& g, const AcyclicPartition& c, Arc e) {
    Divisor d(g.size());
    for (Vertex u : members(c.blocks[e.tail])) d[u] = g.cut_weight(singleton(u), c.blocks[e.head]);
    return d;
}

// ---------------------------------------------------------------------------
// Chip-firing classes

AcyclicPartition reverse_at(const AcyclicPartition& c, int b) {
    AcyclicPartition out = c;
    for (Arc& a : out.arcs)
        if (a.tail == b || a.head == b) std::swap(a.tail, a.head);
    return out;
}

std::vector<AcyclicPartition> class_members(const AcyclicPartition& c) {
    std::set<AcyclicPartition> seen{c};
    std::vector<AcyclicPartition> queue{c};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const AcyclicPartition cur = queue[i];
        const auto in = cur.in_degrees();
        const auto out = cur.out_degrees();
        for (int b = 0; b < cur.size(); ++b) {
            // Sources become sinks and sinks become sources.
            if (in[b] + out[b] == 0 || (in[b] != 0 && out[b] != 0)) continue;
            auto next = reverse_at(cur, b);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

AcyclicPartition canonical_rep(const Multigraph& g, const AcyclicPartition& c) {
    const int s = c.block_of(g.sink());
    AcyclicPartition cur = c;
    for (;;) {
        const auto out = cur.out_degrees();
        int flip = -1;
        for (int b = 0; b < cur.size() && flip < 0; ++b)
            if (b != s && out[b] == 0) flip = b;
        if (flip < 0) return cur;
        cur = reverse_at(cur, flip);
    }
}

ChipClass chip_class(const Multigraph& g, const AcyclicPartition& c) {
    return {canonical_rep(g, c), class_members(c)};
}

std::vector<ClassEdge> class_contractible_edges(const ChipClass& cl) {
    std::map<Arc, const AcyclicPartition*> found;
    for (const auto& m : cl.members)
        for (const Arc& a : contractible_edges(m)) found.emplace(a, &m);
    std::vector<ClassEdge> out;
    for (const auto& [arc, witness] : found) out.push_back({arc, *witness});
    return out;
}

namespace {

int permutation_parity_sign(const std::vector<int>& seq) {
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

}  // namespace

int contraction_sign(const std::vector<VertexSet>& blocks, Arc e) {
    // Reference order: by least vertex, except that the block holding the
    // sink (the largest vertex present) comes last. rho lists tail, head, then
    // the remaining blocks in reference order; rho/e lists the merged block,
    // then the remaining blocks in the same order.
    VertexSet all = 0;
    for (VertexSet b : blocks) all |= b;
    const Vertex top = members(all).back();
    auto reference = [&](std::vector<VertexSet> order) {
        sort_blocks(order);
        std::stable_partition(order.begin(), order.end(), [&](VertexSet b) { return !contains(b, top); });
        return order;
    };
    const auto tau = reference(blocks);
    auto position_in = [](const std::vector<VertexSet>& order, VertexSet s) {
        return static_cast<int>(std::find(order.begin(), order.end(), s) - order.begin());
    };

    const int k = static_cast<int>(blocks.size());
    std::vector<int> rest;
    for (VertexSet b : tau)
        if (b != blocks[e.tail] && b != blocks[e.head]) rest.push_back(position_in(tau, b));
    std::vector<int> rho{position_in(tau, blocks[e.tail]), position_in(tau, blocks[e.head])};
    rho.insert(rho.end(), rest.begin(), rest.end());

    const VertexSet merged = blocks[e.tail] | blocks[e.head];
    std::vector<VertexSet> contracted;
    for (int b = 0; b < k; ++b)
        if (b != e.tail && b != e.head) contracted.push_back(blocks[b]);
    contracted.push_back(merged);
    const auto tau_contracted = reference(contracted);
    std::vector<int> rho_contracted{position_in(tau_contracted, merged)};
    for (int p : rest) rho_contracted.push_back(position_in(tau_contracted, tau[p]));
    return permutation_parity_sign(rho) * permutation_parity_sign(rho_contracted);
}

int sign(const ChipClass& cl, Arc e) {
    const bool ok = std::any_of(cl.members.begin(), cl.members.end(),
                                [&](const AcyclicPartition& m) { return is_contractible(m, e); });
    if (!ok) throw Error("edge is not contractible in the class");
    return contraction_sign(cl.canonical.blocks, e);
}

AcyclicPartition make_acyclic_partition(const Multigraph& g, std::vector<VertexSet> blocks,
                                        const std::vector<std::pair<VertexSet, VertexSet>>& arcs) {
    sort_blocks(blocks);
    VertexSet cover = 0;
    for (VertexSet b : blocks) {
        if (b & cover) throw Error("blocks overlap");
        if (!g.induces_connected(b)) throw Error("block " + block_to_string(b) + " is not connected");
        cover |= b;
    }
    if (cover != g.all_vertices()) throw Error("blocks do not cover the vertex set");
    auto index = [&](VertexSet s) {
        auto it = std::find(blocks.begin(), blocks.end(), s);
        if (it == blocks.end()) throw Error("arc endpoint " + block_to_string(s) + " is not a block");
        return static_cast<int>(it - blocks.begin());
    };
    std::map<std::pair<int, int>, Arc> oriented;
    for (const auto& [t, h] : arcs) {
        const Arc a{index(t), index(h)};
        if (!oriented.emplace(std::minmax(a.tail, a.head), a).second) throw Error("edge oriented twice");
    }
    AcyclicPartition c{blocks, {}};
    for (const auto& e : quotient_edges(g, blocks)) {
        auto it = oriented.find(e);
        if (it == oriented.end())
            throw Error("edge " + block_to_string(blocks[e.first]) + "-" + block_to_string(blocks[e.second]) +
                        " is not oriented");
        c.arcs.push_back(it->second);
        oriented.erase(it);
    }
    if (!oriented.empty()) throw Error("arc between blocks with no edges");
    if (!c.is_acyclic()) throw Error("orientation has a cycle");
    return c;
}

}  // namespace chipres
