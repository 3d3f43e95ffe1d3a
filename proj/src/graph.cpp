#include "kout/graph.hpp"

#include <algorithm>
#include <string>

#include "kout/errors.hpp"

namespace kout {

Graph::Graph(NodeId n) : n_(n), adj_(n) {}

Graph Graph::from_edges(NodeId n, std::span<const Edge> edges) {
    Graph g(n);
    std::vector<std::size_t> deg(n, 0);
    for (const Edge& e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
            throw InvalidParameter("edge endpoint outside 1.." + std::to_string(n));
        }
        if (e.u == e.v) throw InvalidParameter("self-loop at node " + std::to_string(e.u));
        ++deg[e.u - 1];
        ++deg[e.v - 1];
    }
    for (NodeId i = 0; i < n; ++i) g.adj_[i].reserve(deg[i]);
    for (const Edge& e : edges) {
        g.adj_[e.u - 1].push_back(e.v);
        g.adj_[e.v - 1].push_back(e.u);
    }
    std::size_t twice_m = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        twice_m += list.size();
    }
    g.m_ = twice_m / 2;
    return g;
}

Graph Graph::complete(NodeId n) {
    Graph g(n);
    for (NodeId v = 1; v <= n; ++v) {
        auto& list = g.adj_[v - 1];
        list.reserve(n > 0 ? n - 1 : 0);
        for (NodeId w = 1; w <= n; ++w) {
            if (w != v) list.push_back(w);
        }
    }
    g.m_ = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    const auto& a = adj_[u - 1];
    const auto& b = adj_[v - 1];
    // search the shorter list
    return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                                : std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (NodeId u = 1; u <= n_; ++u) {
        for (NodeId v : adj_[u - 1]) {
            if (v > u) out.push_back({u, v});
        }
    }
    return out;
}

bool Graph::is_subgraph_of(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (NodeId v = 0; v < n_; ++v) {
        if (!std::includes(other.adj_[v].begin(), other.adj_[v].end(),
                           adj_[v].begin(), adj_[v].end())) {
            return false;
        }
    }
    return true;
}

} // namespace kout
