#include "kout/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "kout/errors.hpp"

namespace kout {

namespace {

// Partial Fisher-Yates over a shared pool of ids. Node i's pool is every id
// except i; the first `first` draws form the small selection and the draws
// up to `total` extend it. Swaps are undone so the pool stays the identity
// between nodes and each node costs O(total).
void draw_selections(NodeId n, NodeId first, NodeId total, Rng& rng,
                     std::vector<std::vector<NodeId>>* small,
                     std::vector<std::vector<NodeId>>& big) {
    std::vector<NodeId> pool(n);
    std::iota(pool.begin(), pool.end(), NodeId{1});
    std::vector<std::pair<std::size_t, std::size_t>> swaps;
    swaps.reserve(total + 1);
    const std::size_t pool_size = n - 1;

    for (NodeId i = 1; i <= n; ++i) {
        swaps.clear();
        std::swap(pool[i - 1], pool[n - 1]);
        swaps.emplace_back(i - 1, n - 1);

        std::vector<NodeId> picked;
        picked.reserve(total);
        for (std::size_t t = 0; t < total; ++t) {
            const std::size_t r = t + rng.below(pool_size - t);
            std::swap(pool[t], pool[r]);
            swaps.emplace_back(t, r);
            picked.push_back(pool[t]);
            if (small != nullptr && t + 1 == first) {
                std::vector<NodeId> head(picked);
                std::sort(head.begin(), head.end());
                (*small)[i - 1] = std::move(head);
            }
        }
        std::sort(picked.begin(), picked.end());
        big[i - 1] = std::move(picked);

        for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
            std::swap(pool[it->first], pool[it->second]);
        }
    }
}

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidParameter(std::string(name) + " must lie in [0, 1]");
    }
}

} // namespace

PairingTable PairingTable::from_sets(NodeId n, NodeId K, std::vector<std::vector<NodeId>> sets) {
    if (n < 2) throw InvalidParameter("n must be >= 2");
    if (K < 1 || K > n - 1) throw InvalidParameter("K must lie in 1..n-1");
    if (sets.size() != n) throw InvalidParameter("need one selection set per node");
    for (NodeId i = 1; i <= n; ++i) {
        auto& s = sets[i - 1];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw InvalidParameter("node " + std::to_string(i) + " selects a node twice");
        }
        if (s.size() != K) {
            throw InvalidParameter("node " + std::to_string(i) + " must select exactly K nodes");
        }
        for (NodeId j : s) {
            if (j < 1 || j > n) throw InvalidParameter("selected id outside 1..n");
            if (j == i) throw InvalidParameter("node " + std::to_string(i) + " selects itself");
        }
    }
    PairingTable t;
    t.n_ = n;
    t.K_ = K;
    t.sets_ = std::move(sets);
    return t;
}

bool PairingTable::selected(NodeId i, NodeId j) const {
    const auto& s = sets_[i - 1];
    return std::binary_search(s.begin(), s.end(), j);
}

PairingTable sample_pairing(NodeId n, NodeId K, const SeedSpec& seed) {
    check_model_ranges(n, K, 1.0);
    Rng rng(seed);
    std::vector<std::vector<NodeId>> sets(n);
    draw_selections(n, K, K, rng, nullptr, sets);
    return PairingTable::from_sets(n, K, std::move(sets));
}

std::pair<PairingTable, PairingTable> nested_kout(NodeId n, NodeId K, NodeId K_big,
                                                  const SeedSpec& seed) {
    if (K > K_big) throw InvalidParameter("K must not exceed K_big");
    check_model_ranges(n, K, 1.0);
    check_model_ranges(n, K_big, 1.0);
    Rng rng(seed);
    std::vector<std::vector<NodeId>> small(n), big(n);
    draw_selections(n, K, K_big, rng, &small, big);
    return {PairingTable::from_sets(n, K, std::move(small)),
            PairingTable::from_sets(n, K_big, std::move(big))};
}

Graph kout_graph(const PairingTable& pairing) {
    const NodeId n = pairing.num_nodes();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * pairing.selections_per_node());
    for (NodeId i = 1; i <= n; ++i) {
        for (NodeId j : pairing.selection(i)) {
            edges.push_back(i < j ? Edge{i, j} : Edge{j, i});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph er_graph(NodeId n, double p, const SeedSpec& seed) {
    check_probability(p, "p");
    if (p == 0.0) return Graph(n);
    if (p == 1.0) return Graph::complete(n);

    // Geometric skipping over the pairs (w, v), w < v, in row order
    // (Batagelj & Brandes); same law as one Bernoulli draw per pair.
    Rng rng(seed);
    const double log_q = std::log1p(-p);
    const auto pairs = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(pairs * p * 1.1) + 16);
    std::int64_t v = 1;
    std::int64_t w = -1;
    while (v < static_cast<std::int64_t>(n)) {
        const double skip = std::floor(std::log1p(-rng.unit()) / log_q);
        w += 1 + static_cast<std::int64_t>(std::min(skip, pairs));
        while (w >= v && v < static_cast<std::int64_t>(n)) {
            w -= v;
            ++v;
        }
        if (v < static_cast<std::int64_t>(n)) {
            edges.push_back({static_cast<NodeId>(w + 1), static_cast<NodeId>(v + 1)});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph intersect(const Graph& g, const Graph& h) {
    if (g.num_nodes() != h.num_nodes()) {
        throw InvalidParameter("cannot intersect graphs with different node counts");
    }
    std::vector<Edge> edges;
    std::vector<NodeId> common;
    for (NodeId u = 1; u <= g.num_nodes(); ++u) {
        common.clear();
        auto a = g.neighbors(u);
        auto b = h.neighbors(u);
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        for (NodeId v : common) {
            if (v > u) edges.push_back({u, v});
        }
    }
    return Graph::from_edges(g.num_nodes(), edges);
}

Graph sample_intersection(const ModelParams& params, const SeedSpec& seed) {
    check_model_ranges(params.n, params.K, params.p);
    const Graph h = kout_graph(sample_pairing(params.n, params.K, seed.child("pairing")));
    Rng channel(seed.child("channel"));
    std::vector<Edge> kept;
    for (const Edge& e : h.edges()) {
        if (channel.bernoulli(params.p)) kept.push_back(e);
    }
    return Graph::from_edges(params.n, kept);
}

std::pair<Graph, Graph> nested_er(NodeId n, double p, double p_big, const SeedSpec& seed) {
    check_probability(p, "p");
    check_probability(p_big, "p_big");
    if (p > p_big) throw InvalidParameter("p must not exceed p_big");
    Graph big = er_graph(n, p_big, seed.child("big"));
    const double keep = p_big == 0.0 ? 1.0 : p / p_big;
    if (keep >= 1.0) return {big, big};
    Graph small = intersect(big, er_graph(n, keep, seed.child("thin")));
    return {std::move(small), std::move(big)};
}

double kout_edge_probability(NodeId n, NodeId K) {
    check_model_ranges(n, K, 1.0);
    const double r = static_cast<double>(K) / static_cast<double>(n - 1);
    return 2.0 * r - r * r;
}

double edge_probability(NodeId n, NodeId K, double p) {
    check_model_ranges(n, K, p);
    return p * kout_edge_probability(n, K);
}

} // namespace kout
