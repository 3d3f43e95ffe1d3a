#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kout {

/// Vertex id; vertices are numbered 1..n.
using NodeId = std::uint32_t;

/// Unordered pair stored with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 1..n with sorted neighbor lists.
///
/// Immutable once built: every generator returns a fresh Graph.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(NodeId n);

    /// Builds from an edge list. Endpoint order is irrelevant and repeated
    /// pairs collapse to one edge; self-loops and ids outside 1..n throw
    /// InvalidParameter.
    static Graph from_edges(NodeId n, std::span<const Edge> edges);

    static Graph complete(NodeId n);

    NodeId num_nodes() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return m_; }

    std::span<const NodeId> neighbors(NodeId v) const { return adj_[v - 1]; }
    std::size_t degree(NodeId v) const { return adj_[v - 1].size(); }
    bool has_edge(NodeId u, NodeId v) const;

    /// All edges in lexicographic (u, v) order with u < v.
    std::vector<Edge> edges() const;

    /// True iff both graphs have the same n and every edge of *this is in other.
    bool is_subgraph_of(const Graph& other) const;

    bool operator==(const Graph& other) const = default;

private:
    NodeId n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<NodeId>> adj_;
};

} // namespace kout
