#ifndef CHIPRES_PARTITIONS_HPP
#define CHIPRES_PARTITIONS_HPP

#include <compare>
#include <string>
#include <vector>

#include "chipres/graph.hpp"

namespace chipres {

/// Partition of the vertex set into connected blocks, blocks sorted by their
/// least vertex.
struct ConnectedPartition {
    std::vector<VertexSet> blocks;

    int size() const { return static_cast<int>(blocks.size()); }
    int block_of(Vertex v) const;
    auto operator<=>(const ConnectedPartition&) const = default;
};

/// Directed quotient edge between two blocks, by block index.
struct Arc {
    int tail = 0;
    int head = 0;
    auto operator<=>(const Arc&) const = default;
};

/// Connected partition with an acyclic orientation of its quotient graph.
/// `arcs` holds exactly one arc per pair of blocks with positive cut weight,
/// ordered by (min endpoint, max endpoint).
struct AcyclicPartition {
    std::vector<VertexSet> blocks;
    std::vector<Arc> arcs;

    int size() const { return static_cast<int>(blocks.size()); }
    int block_of(Vertex v) const;
    ConnectedPartition partition() const { return {blocks}; }
    std::vector<int> out_degrees() const;
    std::vector<int> in_degrees() const;
    bool has_arc(int tail, int head) const;
    /// Unique sink at the block holding the graph's sink vertex.
    bool is_n_acyclic(Vertex sink) const;
    bool is_acyclic() const;

    /// e.g. "1->234, 3->4" with 1-based vertices; singleton graphs print "[1234]".
    std::string to_string() const;

    auto operator<=>(const AcyclicPartition&) const = default;
};

/// All members of one chip-firing class, with its n-acyclic representative.
struct ChipClass {
    AcyclicPartition canonical;
    std::vector<AcyclicPartition> members;  // sorted, includes canonical
};

/// A contractible quotient edge of a class together with a member it appears in.
struct ClassEdge {
    Arc arc;
    AcyclicPartition witness;
};

std::vector<ConnectedPartition> connected_partitions(const Multigraph& g, int k);

/// Quotient multigraph on the blocks; non-sink blocks keep their canonical
/// order and the block holding the sink moves last.
Multigraph quotient(const Multigraph& g, const ConnectedPartition& p);
/// Quotient vertex index -> block index, matching `quotient`.
std::vector<int> quotient_order(const Multigraph& g, const ConnectedPartition& p);

/// Block pairs with positive cut weight, in canonical order.
std::vector<std::pair<int, int>> quotient_edges(const Multigraph& g, const std::vector<VertexSet>& blocks);

/// Every acyclic orientation of the quotient graph of p.
std::vector<AcyclicPartition> acyclic_orientations(const Multigraph& g, const ConnectedPartition& p);
/// Acyclic orientations with unique sink at the sink block, in canonical order.
std::vector<AcyclicPartition> n_acyclic_orientations(const Multigraph& g, const ConnectedPartition& p);
std::vector<AcyclicPartition> n_acyclic_partitions(const Multigraph& g, int k);

/// D(C): each vertex counts its edges into out-neighbour blocks.
Divisor divisor_of(const Multigraph& g, const AcyclicPartition& c);

/// Arcs whose contraction leaves the quotient acyclic.
std::vector<Arc> contractible_edges(const AcyclicPartition& c);
bool is_contractible(const AcyclicPartition& c, Arc e);
AcyclicPartition contract(const AcyclicPartition& c, Arc e);
/// Divisor subtracted by contracting e: sum over u in tail, v in head of a_uv * u.
Divisor contraction_drop(const Multigraph& g, const AcyclicPartition& c, Arc e);

/// Reverse every arc at block b.
AcyclicPartition reverse_at(const AcyclicPartition& c, int b);
std::vector<AcyclicPartition> class_members(const AcyclicPartition& c);
AcyclicPartition canonical_rep(const Multigraph& g, const AcyclicPartition& c);
ChipClass chip_class(const Multigraph& g, const AcyclicPartition& c);
std::vector<ClassEdge> class_contractible_edges(const ChipClass& cl);

/// Sign of contracting e. The reference block order sorts by minimum vertex
/// and puts the block holding the sink last. Depends only on the blocks and on e.
int contraction_sign(const std::vector<VertexSet>& blocks, Arc e);
/// As contraction_sign, but rejects arcs that are not contractible in the class.
int sign(const ChipClass& cl, Arc e);

/// Build and validate an AcyclicPartition from blocks in any order and arcs
/// given as (tail block, head block). Every quotient edge must be oriented
/// exactly once and the result must be acyclic.
AcyclicPartition make_acyclic_partition(const Multigraph& g, std::vector<VertexSet> blocks,
                                        const std::vector<std::pair<VertexSet, VertexSet>>& arcs);

std::string block_to_string(VertexSet s);

}  // namespace chipres

#endif
