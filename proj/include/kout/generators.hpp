#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kout/graph.hpp"
#include "kout/params.hpp"
#include "kout/seed.hpp"

namespace kout {

/// The offline pairing: node i selected the K nodes in selection(i).
class PairingTable {
public:
    PairingTable() = default;

    /// Validates the sets (size K, no self-selection, ids in 1..n) and
    /// stores them sorted. sets[i - 1] belongs to node i.
    static PairingTable from_sets(NodeId n, NodeId K, std::vector<std::vector<NodeId>> sets);

    NodeId num_nodes() const noexcept { return n_; }
    NodeId selections_per_node() const noexcept { return K_; }

    /// Ascending ids chosen by node i.
    std::span<const NodeId> selection(NodeId i) const { return sets_[i - 1]; }

    /// True iff node i selected node j.
    bool selected(NodeId i, NodeId j) const;

    bool operator==(const PairingTable&) const = default;

private:
    NodeId n_ = 0;
    NodeId K_ = 0;
    std::vector<std::vector<NodeId>> sets_;
};

/// Each node draws a uniform K-subset of the other n-1 nodes, independently.
PairingTable sample_pairing(NodeId n, NodeId K, const SeedSpec& seed);

/// Edge {i, j} iff i selected j or j selected i.
Graph kout_graph(const PairingTable& pairing);

/// Gilbert graph: every pair present independently with probability p.
Graph er_graph(NodeId n, double p, const SeedSpec& seed);

/// Edge-set intersection; throws InvalidParameter on mismatched n.
Graph intersect(const Graph& g, const Graph& h);

/// One draw of the K-out graph intersected with an independent on/off
/// channel graph. Channels are only drawn for K-out edges, which gives the
/// same law as intersecting with a full ER(n, p) draw.
Graph sample_intersection(const ModelParams& params, const SeedSpec& seed);

/// Coupled ER pair (small, big) with small a subgraph of big. big is
/// ER(n, p_big); small is big intersected with an independent
/// ER(n, p / p_big). The ratio is taken as 1 when p_big is 0.
std::pair<Graph, Graph> nested_er(NodeId n, double p, double p_big, const SeedSpec& seed);

/// Coupled pairings (small, big): each node first picks K nodes, then
/// K_big - K more uniformly from the ones it has not picked.
/// big has exactly the law of sample_pairing(n, K_big, seed); in fact it is
/// the same draw.
std::pair<PairingTable, PairingTable> nested_kout(NodeId n, NodeId K, NodeId K_big,
                                                  const SeedSpec& seed);

/// P[i ~ j] in the K-out graph: 2K/(n-1) - (K/(n-1))^2.
double kout_edge_probability(NodeId n, NodeId K);

/// P[i ~ j] in the intersection graph: p * kout_edge_probability(n, K).
double edge_probability(NodeId n, NodeId K, double p);

} // namespace kout
