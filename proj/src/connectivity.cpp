#include "kout/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <stack>

#include "kout/errors.hpp"

namespace kout {

namespace {

// Unit-capacity flow network for vertex-disjoint paths. Node v becomes
// in(v) = 2(v-1) and out(v) = 2(v-1) + 1 joined by a capacity-1 arc; each
// edge {u, w} becomes arcs out(u) -> in(w) and out(w) -> in(u).
class SplitFlowNetwork {
public:
    explicit SplitFlowNetwork(const Graph& g) : head_(2 * static_cast<std::size_t>(g.num_nodes()), -1) {
        const std::size_t n = g.num_nodes();
        to_.reserve(2 * (n + 2 * g.num_edges()));
        for (NodeId v = 1; v <= g.num_nodes(); ++v) add_arc(in(v), out(v));
        for (const Edge& e : g.edges()) {
            add_arc(out(e.u), in(e.v));
            add_arc(out(e.v), in(e.u));
        }
        cap_initial_ = cap_;
        parent_arc_.assign(head_.size(), -1);
    }

    std::size_t disjoint_paths(NodeId u, NodeId v, std::size_t limit) {
        cap_ = cap_initial_;
        const int source = out(u);
        const int sink = in(v);
        std::size_t flow = 0;
        std::vector<int> queue;
        queue.reserve(head_.size());
        while (flow < limit) {
            std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
            queue.clear();
            queue.push_back(source);
            parent_arc_[source] = -2;
            bool reached = false;
            for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
                const int x = queue[qi];
                for (int a = head_[x]; a != -1; a = next_[a]) {
                    const int y = to_[a];
                    if (cap_[a] > 0 && parent_arc_[y] == -1) {
                        parent_arc_[y] = a;
                        if (y == sink) {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if (!reached) break;
            for (int y = sink; y != source;) {
                const int a = parent_arc_[y];
                --cap_[a];
                ++cap_[a ^ 1];
                y = to_[a ^ 1];
            }
            ++flow;
        }
        return flow;
    }

private:
    static int in(NodeId v) { return 2 * static_cast<int>(v - 1); }
    static int out(NodeId v) { return 2 * static_cast<int>(v - 1) + 1; }

    void add_arc(int from, int to) {
        // forward arc at an even index, its residual twin at the next one
        to_.push_back(to);
        cap_.push_back(1);
        next_.push_back(head_[from]);
        head_[from] = static_cast<int>(to_.size()) - 1;
        to_.push_back(from);
        cap_.push_back(0);
        next_.push_back(head_[to]);
        head_[to] = static_cast<int>(to_.size()) - 1;
    }

    std::vector<int> head_;
    std::vector<int> to_;
    std::vector<int> next_;
    std::vector<int> cap_;
    std::vector<int> cap_initial_;
    std::vector<int> parent_arc_;
};

NodeId min_degree_vertex(const Graph& g) {
    NodeId best = 1;
    for (NodeId v = 2; v <= g.num_nodes(); ++v) {
        if (g.degree(v) < g.degree(best)) best = v;
    }
    return best;
}

bool is_complete(const Graph& g) {
    const std::size_t n = g.num_nodes();
    return g.num_edges() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

// Minimum of `cap` and the local connectivities that decide the global
// one (Esfahanian-Hakimi): with v of minimum degree, any minimum separator
// either misses v and splits v from a non-neighbor w, or contains v and
// splits two non-adjacent neighbors of v.
std::size_t connectivity_capped(const Graph& g, std::size_t cap) {
    if (cap == 0) return 0;
    SplitFlowNetwork net(g);
    const NodeId v = min_degree_vertex(g);
    std::size_t kappa = cap;
    auto nbrs = g.neighbors(v);
    for (NodeId w = 1; w <= g.num_nodes() && kappa > 0; ++w) {
        if (w == v || std::binary_search(nbrs.begin(), nbrs.end(), w)) continue;
        kappa = std::min(kappa, net.disjoint_paths(v, w, kappa));
    }
    for (std::size_t a = 0; a < nbrs.size() && kappa > 0; ++a) {
        for (std::size_t b = a + 1; b < nbrs.size() && kappa > 0; ++b) {
            if (g.has_edge(nbrs[a], nbrs[b])) continue;
            kappa = std::min(kappa, net.disjoint_paths(nbrs[a], nbrs[b], kappa));
        }
    }
    return kappa;
}

// Iterative Hopcroft-Tarjan low-link search for a cut vertex.
bool has_articulation_point(const Graph& g) {
    const NodeId n = g.num_nodes();
    std::vector<std::size_t> disc(n + 1, 0), low(n + 1, 0);
    std::size_t timer = 0;
    struct Frame {
        NodeId v;
        NodeId parent;
        std::size_t next;
        std::size_t children;
    };
    for (NodeId root = 1; root <= n; ++root) {
        if (disc[root] != 0) continue;
        std::vector<Frame> stack{{root, 0, 0, 0}};
        disc[root] = low[root] = ++timer;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                const NodeId w = nbrs[f.next++];
                if (disc[w] == 0) {
                    ++f.children;
                    disc[w] = low[w] = ++timer;
                    stack.push_back({w, f.v, 0, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children >= 2) return true;
                break;
            }
            Frame& up = stack.back();
            low[up.v] = std::min(low[up.v], low[done.v]);
            if (up.parent != 0 && low[done.v] >= disc[up.v]) return true;
        }
    }
    return false;
}

} // namespace

DegreeReport degree_report(const Graph& g, std::span<const std::size_t> ells) {
    DegreeReport r;
    const NodeId n = g.num_nodes();
    r.degrees.resize(n);
    std::size_t max_deg = 0;
    r.min_degree = n > 0 ? std::numeric_limits<std::size_t>::max() : 0;
    for (NodeId v = 1; v <= n; ++v) {
        const std::size_t d = g.degree(v);
        r.degrees[v - 1] = d;
        max_deg = std::max(max_deg, d);
        r.min_degree = std::min(r.min_degree, d);
    }
    r.histogram.assign(n > 0 ? max_deg + 1 : 0, 0);
    for (std::size_t d : r.degrees) ++r.histogram[d];
    for (std::size_t ell : ells) {
        r.count_ell[ell] = ell < r.histogram.size() ? r.histogram[ell] : 0;
    }
    return r;
}

std::size_t min_degree(const Graph& g) {
    if (g.num_nodes() == 0) return 0;
    return g.degree(min_degree_vertex(g));
}

bool min_degree_at_least(const Graph& g, std::size_t k) {
    for (NodeId v = 1; v <= g.num_nodes(); ++v) {
        if (g.degree(v) < k) return false;
    }
    return true;
}

bool is_connected(const Graph& g) {
    const NodeId n = g.num_nodes();
    if (n <= 1) return true;
    std::vector<char> seen(n + 1, 0);
    std::vector<NodeId> stack{1};
    seen[1] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::size_t local_vertex_connectivity(const Graph& g, NodeId u, NodeId v, std::size_t limit) {
    if (u == v || u < 1 || v < 1 || u > g.num_nodes() || v > g.num_nodes()) {
        throw InvalidParameter("local connectivity needs two distinct valid nodes");
    }
    if (g.has_edge(u, v)) throw InvalidParameter("local connectivity is undefined for adjacent nodes");
    SplitFlowNetwork net(g);
    return net.disjoint_paths(u, v, limit);
}

bool is_k_connected(const Graph& g, std::size_t k) {
    if (k < 1) throw InvalidParameter("k must be >= 1");
    if (g.num_nodes() < k + 1) return false;
    if (!min_degree_at_least(g, k)) return false;
    if (k == 1) return is_connected(g);
    if (k == 2) return is_connected(g) && !has_articulation_point(g);
    if (is_complete(g)) return true;
    return connectivity_capped(g, k) >= k;
}

std::size_t vertex_connectivity(const Graph& g) {
    const NodeId n = g.num_nodes();
    if (n <= 1 || !is_connected(g)) return 0;
    if (is_complete(g)) return n - 1;
    return connectivity_capped(g, min_degree(g));
}

namespace detail {

bool is_k_connected_by_flow(const Graph& g, std::size_t k) {
    if (k < 1) throw InvalidParameter("k must be >= 1");
    if (g.num_nodes() < k + 1) return false;
    if (is_complete(g)) return true;
    return connectivity_capped(g, k) >= k;
}

} // namespace detail

} // namespace kout
