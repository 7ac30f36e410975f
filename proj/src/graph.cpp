#include "chipres/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace chipres {

int popcount(VertexSet s) { return std::popcount(s); }

Vertex min_vertex(VertexSet s) { return s == 0 ? -1 : std::countr_zero(s); }

std::vector<Vertex> members(VertexSet s) {
    std::vector<Vertex> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Divisor

std::int64_t Divisor::degree() const {
    return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

bool Divisor::nonnegative_off(Vertex skip) const {
    for (int v = 0; v < size(); ++v)
        if (v != skip && values_[v] < 0) return false;
    return true;
}

bool Divisor::dominated_by(const Divisor& other) const {
    for (int v = 0; v < size(); ++v)
        if (values_[v] > other.values_[v]) return false;
    return true;
}

Divisor& Divisor::operator+=(const Divisor& other) {
    for (int v = 0; v < size(); ++v) values_[v] += other.values_[v];
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
    for (int v = 0; v < size(); ++v) values_[v] -= other.values_[v];
    return *this;
}

Divisor operator*(std::int64_t k, Divisor a) {
    for (auto& x : a.values_) x *= k;
    return a;
}

std::string Divisor::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int v = 0; v < size(); ++v) os << (v ? "," : "") << values_[v];
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// Multigraph

Multigraph::Multigraph(int n, std::vector<std::vector<int>> weights)
    : n_(n), weights_(std::move(weights)) {
    if (n < 1) throw Error("graph must have at least one vertex");
    if (n > kMaxVertices) throw Error("graph has more than " + std::to_string(kMaxVertices) + " vertices");
    if (static_cast<int>(weights_.size()) != n) throw Error("weight matrix has wrong row count");
    for (int u = 0; u < n; ++u) {
        if (static_cast<int>(weights_[u].size()) != n) throw Error("weight matrix is not square");
        if (weights_[u][u] != 0) throw Error("self-loop at vertex " + std::to_string(u + 1));
        for (int v = 0; v < n; ++v) {
            if (weights_[u][v] < 0) throw Error("negative edge weight");
            if (weights_[u][v] != weights_[v][u]) throw Error("weight matrix is not symmetric");
        }
    }
    if (!induces_connected(all_vertices())) throw Error("graph is disconnected");
}

int Multigraph::degree(Vertex v) const {
    return std::accumulate(weights_[v].begin(), weights_[v].end(), 0);
}

int Multigraph::edge_count() const {
    int count = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (weights_[u][v] > 0) ++count;
    return count;
}

int Multigraph::cut_weight(VertexSet a, VertexSet b) const {
    int total = 0;
    for (Vertex u : members(a))
        for (Vertex v : members(b)) total += weights_[u][v];
    return total;
}

VertexSet Multigraph::neighbours(Vertex v) const {
    VertexSet s = 0;
    for (int u = 0; u < n_; ++u)
        if (weights_[v][u] > 0) s |= singleton(u);
    return s;
}

bool Multigraph::induces_connected(VertexSet s) const {
    if (s == 0) return false;
    VertexSet seen = singleton(min_vertex(s));
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (Vertex v : members(frontier)) next |= neighbours(v) & s;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == s;
}

bool Multigraph::is_tree() const { return edge_count() == n_ - 1; }

bool Multigraph::is_saturated() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (weights_[u][v] == 0) return false;
    return true;
}

Multigraph Multigraph::relabelled_swap(Vertex a, Vertex b) const {
    auto w = weights_;
    std::swap(w[a], w[b]);
    for (auto& row : w) std::swap(row[a], row[b]);
    return Multigraph(n_, std::move(w));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct RawEdge {
    long long u, v, w;
};

Multigraph assemble(std::optional<long long> declared_n, const std::vector<RawEdge>& edges,
                    std::optional<long long> sink) {
    long long n = declared_n.value_or(0);
    if (!declared_n) {
        for (const auto& e : edges) n = std::max({n, e.u, e.v});
        if (n == 0) n = 1;
    }
    if (n < 1 || n > kMaxVertices) throw Error("vertex count out of range");
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    std::set<std::pair<long long, long long>> seen;
    for (const auto& e : edges) {
        if (e.u < 1 || e.v < 1 || e.u > n || e.v > n)
            throw Error("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
        if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
        if (e.w <= 0) throw Error("nonpositive edge weight on edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw Error("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
        w[e.u - 1][e.v - 1] = static_cast<int>(e.w);
        w[e.v - 1][e.u - 1] = static_cast<int>(e.w);
    }
    Multigraph g(static_cast<int>(n), std::move(w));
    if (sink) {
        if (*sink < 1 || *sink > n) throw Error("sink out of range");
        if (*sink != n) g = g.relabelled_swap(static_cast<Vertex>(*sink - 1), static_cast<Vertex>(n - 1));
    }
    return g;
}

Multigraph parse_json(std::string_view text, std::optional<int> sink_override) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid JSON graph: ") + e.what());
    }
    if (!j.is_object() || !j.contains("edges")) throw Error("JSON graph needs an \"edges\" array");
    std::optional<long long> n;
    if (j.contains("n")) n = j.at("n").get<long long>();
    std::vector<RawEdge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3)) throw Error("each edge must be [u, v] or [u, v, w]");
        edges.push_back({e[0].get<long long>(), e[1].get<long long>(), e.size() == 3 ? e[2].get<long long>() : 1});
    }
    std::optional<long long> sink;
    if (j.contains("sink") && !j.at("sink").is_null()) sink = j.at("sink").get<long long>();
    if (sink_override) sink = *sink_override;
    return assemble(n, edges, sink);
}

Multigraph parse_edge_list(std::string_view text, std::optional<int> sink_override) {
    std::optional<long long> n;
    std::optional<long long> sink;
    std::vector<RawEdge> edges;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        // "/" separates edges when a list is written on one line.
        std::replace(line.begin(), line.end(), '/', '\n');
        std::istringstream parts(line);
        std::string chunk;
        while (std::getline(parts, chunk)) {
            std::istringstream ls(chunk);
            std::vector<std::string> tok;
            for (std::string t; ls >> t;) tok.push_back(t);
            if (tok.empty()) continue;
            auto number = [&](const std::string& s) -> long long {
                try {
                    std::size_t pos = 0;
                    long long v = std::stoll(s, &pos);
                    if (pos != s.size()) throw Error("");
                    return v;
                } catch (...) {
                    throw Error("line " + std::to_string(lineno) + ": expected an integer, got '" + s + "'");
                }
            };
            if (tok[0] == "n") {
                if (tok.size() != 2) throw Error("line " + std::to_string(lineno) + ": expected 'n <count>'");
                n = number(tok[1]);
            } else if (tok[0] == "sink") {
                if (tok.size() != 2) throw Error("line " + std::to_string(lineno) + ": expected 'sink <vertex>'");
                sink = number(tok[1]);
            } else {
                if (tok.size() != 3) throw Error("line " + std::to_string(lineno) + ": expected 'u v w'");
                edges.push_back({number(tok[0]), number(tok[1]), number(tok[2])});
            }
        }
    }
    if (sink_override) sink = *sink_override;
    return assemble(n, edges, sink);
}

}  // namespace

Multigraph parse_graph(std::string_view text, std::optional<int> sink_override) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text, sink_override);
    return parse_edge_list(text, sink_override);
}

// ---------------------------------------------------------------------------
// Chip firing

IntMatrix laplacian(const Multigraph& g) {
    const int n = g.size();
    IntMatrix lap(n, std::vector<std::int64_t>(n, 0));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) lap[u][v] = -g.weight(u, v);
        lap[u][u] = g.degree(u);
    }
    return lap;
}

namespace {

// d -= k * (sum of Laplacian rows over s)
void fire_in_place(const Multigraph& g, Divisor& d, VertexSet s, std::int64_t k = 1) {
    const VertexSet rest = g.all_vertices() & ~s;
    for (Vertex v : members(s)) d[v] -= k * g.cut_weight(singleton(v), rest);
    for (Vertex v : members(rest)) d[v] += k * g.cut_weight(singleton(v), s);
}

}  // namespace

Divisor fire(const Multigraph& g, const Divisor& d, VertexSet s) {
    if (d.size() != g.size()) throw Error("divisor length does not match graph");
    Divisor out = d;
    fire_in_place(g, out, s & g.all_vertices());
    return out;
}

Divisor q_reduce(const Multigraph& g, const Divisor& d) {
    if (d.size() != g.size()) throw Error("divisor length does not match graph");
    const int n = g.size();
    const Vertex q = g.sink();
    Divisor out = d;
    if (n == 1) return out;

    // Step 1: make every non-sink vertex nonnegative by borrowing, layer by
    // layer from the farthest BFS layer inwards. Borrowing at {dist >= r} only
    // moves chips from layer r-1 into layer r.
    std::vector<int> dist(n, -1);
    dist[q] = 0;
    std::vector<Vertex> queue{q};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Vertex u : members(g.neighbours(queue[i]))) {
            if (dist[u] < 0) {
                dist[u] = dist[queue[i]] + 1;
                queue.push_back(u);
            }
        }
    }
    const int max_dist = *std::max_element(dist.begin(), dist.end());
    for (int r = max_dist; r >= 1; --r) {
        VertexSet outer = 0, inner = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (dist[v] >= r) outer |= singleton(v);
            if (dist[v] == r - 1) inner |= singleton(v);
        }
        std::int64_t times = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (dist[v] != r || out[v] >= 0) continue;
            const std::int64_t gain = g.cut_weight(singleton(v), inner);
            times = std::max(times, (-out[v] + gain - 1) / gain);
        }
        if (times > 0) fire_in_place(g, out, outer, -times);
    }

    // Step 2: Dhar burning from the sink; fire the unburnt set until it is empty.
    for (;;) {
        VertexSet burnt = singleton(q);
        bool grew = true;
        while (grew) {
            grew = false;
            for (Vertex v = 0; v < n; ++v) {
                if (contains(burnt, v)) continue;
                if (g.cut_weight(singleton(v), burnt) > out[v]) {
                    burnt |= singleton(v);
                    grew = true;
                }
            }
        }
        const VertexSet unburnt = g.all_vertices() & ~burnt;
        if (unburnt == 0) break;
        std::int64_t times = -1;
        for (Vertex v : members(unburnt)) {
            const std::int64_t outflow = g.cut_weight(singleton(v), burnt);
            if (outflow > 0) {
                const std::int64_t k = out[v] / outflow;
                times = times < 0 ? k : std::min(times, k);
            }
        }
        fire_in_place(g, out, unburnt, std::max<std::int64_t>(times, 1));
    }
    return out;
}

bool linearly_equivalent(const Multigraph& g, const Divisor& d, const Divisor& e) {
    if (d.degree() != e.degree()) return false;
    return q_reduce(g, d) == q_reduce(g, e);
}

std::int64_t divisor_order(const Multigraph& g, const Divisor& d) {
    if (d.degree() != 0) throw Error("divisor_order needs a degree-zero divisor");
    const Divisor zero(g.size());
    Divisor acc = d;
    for (std::int64_t m = 1;; ++m) {
        acc = q_reduce(g, acc);
        if (acc == zero) return m;
        acc += d;
    }
}

}  // namespace chipres
