#include <doctest.h>

#include "kout/connectivity.hpp"
#include "kout/errors.hpp"
#include "kout/generators.hpp"
#include "oracles.hpp"

using namespace kout;
using oracle::cycle;
using oracle::path;
using oracle::star;

TEST_CASE("degree_report") {
    const std::vector<std::size_t> ells{0, 2, 4};
    const auto empty = degree_report(Graph(5), ells);
    CHECK(empty.min_degree == 0);
    CHECK(empty.count_ell.at(0) == 5);
    CHECK(empty.count_ell.at(4) == 0);

    const auto full = degree_report(Graph::complete(5), ells);
    CHECK(full.min_degree == 4);
    CHECK(full.count_ell.at(4) == 5);

    const auto ring = degree_report(cycle(5), ells);
    CHECK(ring.min_degree == 2);
    CHECK(ring.count_ell.at(2) == 5);
    CHECK(ring.count_ell.at(0) == 0);
    CHECK(ring.count_ell.at(4) == 0);

    const Graph g = sample_intersection({100, 3, 0.5, 1}, {1, "dr", 0});
    const auto r = degree_report(g);
    std::size_t hist_sum = 0, deg_sum = 0;
    for (auto c : r.histogram) hist_sum += c;
    for (auto d : r.degrees) deg_sum += d;
    CHECK(hist_sum == 100);
    CHECK(deg_sum == 2 * g.num_edges());
    CHECK(r.min_degree == *std::min_element(r.degrees.begin(), r.degrees.end()));
}

TEST_CASE("min_degree_at_least") {
    CHECK(min_degree_at_least(Graph(4), 0));
    CHECK_FALSE(min_degree_at_least(star(5), 2));
    CHECK(min_degree_at_least(cycle(5), 2));
    CHECK_FALSE(min_degree_at_least(cycle(5), 3));
}

TEST_CASE("is_k_connected on small families") {
    CHECK(is_k_connected(Graph::complete(5), 4));
    CHECK_FALSE(is_k_connected(Graph::complete(5), 5));
    CHECK(is_k_connected(path(4), 1));
    CHECK_FALSE(is_k_connected(path(4), 2));
    CHECK(is_k_connected(cycle(6), 2));
    CHECK_FALSE(is_k_connected(cycle(6), 3));
    CHECK(is_k_connected(Graph(1), 0 + 1) == false);
    CHECK_THROWS_AS(is_k_connected(cycle(4), 0), InvalidParameter);
}

TEST_CASE("vertex_connectivity on small families") {
    CHECK(vertex_connectivity(Graph(2)) == 0);
    CHECK(vertex_connectivity(Graph(1)) == 0);
    CHECK(vertex_connectivity(Graph(0)) == 0);
    CHECK(vertex_connectivity(cycle(5)) == 2);
    CHECK(vertex_connectivity(Graph::complete(5)) == 4);
    CHECK(vertex_connectivity(star(6)) == 1);
    CHECK(vertex_connectivity(Graph::complete(2)) == 1);

    // K_{3,4}: connectivity 3
    std::vector<Edge> e;
    for (NodeId a = 1; a <= 3; ++a)
        for (NodeId b = 4; b <= 7; ++b) e.push_back({a, b});
    CHECK(vertex_connectivity(Graph::from_edges(7, e)) == 3);
}

TEST_CASE("local_vertex_connectivity") {
    CHECK(local_vertex_connectivity(cycle(6), 1, 4, 10) == 2);
    CHECK(local_vertex_connectivity(cycle(6), 1, 4, 1) == 1);
    CHECK_THROWS_AS(local_vertex_connectivity(cycle(6), 1, 2, 10), InvalidParameter);
    CHECK_THROWS_AS(local_vertex_connectivity(cycle(6), 3, 3, 10), InvalidParameter);
}

TEST_CASE("connectivity matches exhaustive deletion on small random graphs") {
    std::size_t mismatches = 0;
    for (std::uint64_t d = 0; d < 600; ++d) {
        const NodeId n = 2 + d % 7;
        const double p = 0.2 + 0.1 * static_cast<double>(d % 8);
        const Graph g = er_graph(n, p, {31, "small", d});
        const std::size_t brute = oracle::brute_vertex_connectivity(g);
        if (vertex_connectivity(g) != brute) ++mismatches;
        for (std::size_t k = 1; k <= n; ++k) {
            if (is_k_connected(g, k) != (k <= brute)) ++mismatches;
            if (detail::is_k_connected_by_flow(g, k) != (k <= brute)) ++mismatches;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("fast k <= 2 checks agree with max-flow on sampled graphs") {
    for (std::uint64_t d = 0; d < 60; ++d) {
        const Graph g = sample_intersection({150, 2 + static_cast<NodeId>(d % 6), 0.5, 1}, {41, "agree", d});
        for (std::size_t k = 1; k <= 3; ++k) {
            CHECK(is_k_connected(g, k) == detail::is_k_connected_by_flow(g, k));
        }
        const auto kappa = vertex_connectivity(g);
        CHECK(is_k_connected(g, std::max<std::size_t>(kappa, 1)) == (kappa >= 1));
        CHECK_FALSE(is_k_connected(g, kappa + 1));
    }
}

TEST_CASE("k-connected implies min degree >= k; adding edges is monotone") {
    for (std::uint64_t d = 0; d < 100; ++d) {
        const Graph g = er_graph(12, 0.45, {51, "mono", d});
        for (std::size_t k = 1; k <= 5; ++k) {
            if (is_k_connected(g, k)) CHECK(min_degree_at_least(g, k));
        }
        // add one missing edge
        auto edges = g.edges();
        for (NodeId u = 1; u <= 12; ++u) {
            bool added = false;
            for (NodeId v = u + 1; v <= 12; ++v) {
                if (!g.has_edge(u, v)) {
                    edges.push_back({u, v});
                    added = true;
                    break;
                }
            }
            if (added) break;
        }
        const Graph bigger = Graph::from_edges(12, edges);
        CHECK(min_degree(bigger) >= min_degree(g));
        CHECK(vertex_connectivity(bigger) >= vertex_connectivity(g));
    }
}

TEST_CASE("K-out outputs have min degree >= K") {
    for (std::uint64_t d = 0; d < 20; ++d) {
        CHECK(min_degree_at_least(kout_graph(sample_pairing(300, 4, {61, "", d})), 4));
    }
}
