#ifndef CHIPRES_GRAPH_HPP
#define CHIPRES_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chipres {

/// Raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vertices are stored 0-based; vertex i here is vertex i+1 in all user-facing
/// text. The sink is always the last vertex.
using Vertex = int;

/// Bitmask over at most kMaxVertices vertices.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 20;

inline constexpr VertexSet singleton(Vertex v) { return VertexSet{1} << v; }
inline constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1u; }
int popcount(VertexSet s);
Vertex min_vertex(VertexSet s);
std::vector<Vertex> members(VertexSet s);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Chip configuration: one integer per vertex.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(int n) : values_(static_cast<std::size_t>(n), 0) {}
    explicit Divisor(std::vector<std::int64_t> values) : values_(std::move(values)) {}

    int size() const { return static_cast<int>(values_.size()); }
    std::int64_t operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }
    std::int64_t& operator[](int v) { return values_[static_cast<std::size_t>(v)]; }
    const std::vector<std::int64_t>& values() const { return values_; }

    std::int64_t degree() const;
    bool nonnegative_off(Vertex skip) const;
    /// Componentwise order.
    bool dominated_by(const Divisor& other) const;

    Divisor& operator+=(const Divisor& other);
    Divisor& operator-=(const Divisor& other);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(std::int64_t k, Divisor a);

    auto operator<=>(const Divisor&) const = default;

    std::string to_string() const;

private:
    std::vector<std::int64_t> values_;
};

/// Undirected connected multigraph with integer edge weights; the sink is the
/// last vertex.
class Multigraph {
public:
    /// Validates symmetry, zero diagonal, nonnegativity and connectivity.
    Multigraph(int n, std::vector<std::vector<int>> weights);

    int size() const { return n_; }
    Vertex sink() const { return n_ - 1; }
    int weight(Vertex u, Vertex v) const { return weights_[u][v]; }
    const std::vector<std::vector<int>>& weights() const { return weights_; }
    int degree(Vertex v) const;
    int edge_count() const;
    VertexSet all_vertices() const { return n_ == 32 ? ~VertexSet{0} : (singleton(n_) - 1); }

    /// Total weight between two disjoint vertex sets.
    int cut_weight(VertexSet a, VertexSet b) const;
    VertexSet neighbours(Vertex v) const;
    /// True iff s is nonempty and induces a connected subgraph.
    bool induces_connected(VertexSet s) const;
    /// Underlying simple graph is a tree.
    bool is_tree() const;
    /// Every pair of distinct vertices is joined by an edge.
    bool is_saturated() const;

    /// Same graph with vertices u and v exchanged.
    Multigraph relabelled_swap(Vertex u, Vertex v) const;

    bool operator==(const Multigraph&) const = default;

private:
    int n_;
    std::vector<std::vector<int>> weights_;
};

/// Parses the edge-list or JSON formats. `sink_override` (1-based) wins over any
/// sink declared in the input; the declared sink is swapped with vertex n.
Multigraph parse_graph(std::string_view text, std::optional<int> sink_override = std::nullopt);

IntMatrix laplacian(const Multigraph& g);

/// d minus the Laplacian rows indexed by s.
Divisor fire(const Multigraph& g, const Divisor& d, VertexSet s);

/// The q-reduced divisor equivalent to d, with q the sink.
Divisor q_reduce(const Multigraph& g, const Divisor& d);

bool linearly_equivalent(const Multigraph& g, const Divisor& d, const Divisor& e);

/// Least m > 0 with m*d linearly equivalent to 0; d must have degree 0.
std::int64_t divisor_order(const Multigraph& g, const Divisor& d);

}  // namespace chipres

#endif
