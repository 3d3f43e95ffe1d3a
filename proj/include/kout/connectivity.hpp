#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "kout/graph.hpp"

namespace kout {

struct DegreeReport {
    std::vector<std::size_t> degrees;    ///< degrees[i - 1] is the degree of node i
    std::size_t min_degree = 0;          ///< 0 for the empty vertex set
    std::vector<std::size_t> histogram;  ///< histogram[d] = number of nodes of degree d
    std::map<std::size_t, std::size_t> count_ell;  ///< X_ell for each requested ell
};

DegreeReport degree_report(const Graph& g, std::span<const std::size_t> ells = {});

std::size_t min_degree(const Graph& g);

/// Every node has degree >= k; vacuously true for k = 0.
bool min_degree_at_least(const Graph& g, std::size_t k);

/// A single vertex counts as connected.
bool is_connected(const Graph& g);

/// Maximum number of internally vertex-disjoint u-v paths, capped at `limit`.
/// u and v must be distinct and non-adjacent.
std::size_t local_vertex_connectivity(const Graph& g, NodeId u, NodeId v, std::size_t limit);

/// Vertex connectivity >= k: n >= k + 1 and deleting any k - 1 vertices
/// leaves the graph connected. Throws InvalidParameter for k < 1.
bool is_k_connected(const Graph& g, std::size_t k);

/// Largest k with is_k_connected(g, k); 0 for disconnected graphs and n <= 1.
std::size_t vertex_connectivity(const Graph& g);

namespace detail {

/// is_k_connected computed with max-flow alone, without the linear-time
/// shortcuts used for k <= 2.
bool is_k_connected_by_flow(const Graph& g, std::size_t k);

} // namespace detail

} // namespace kout
