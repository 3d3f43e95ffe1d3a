#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kout/params.hpp"

namespace kout {

/// Left side of the scaling law, pK(1 - log(1-p)/p - K/(n-1)), written as
/// pK - K log(1-p) - pK^2/(n-1) so that p = 0 gives 0. Requires p < 1.
double scaling_lhs(NodeId n, NodeId K, double p);

/// log n + (k-1) log log n. Requires n >= 3 when k >= 2.
double threshold_rhs(NodeId n, int k);

/// Deviation of (n, K, p) from the minimum-degree-k threshold:
/// scaling_lhs - threshold_rhs. Natural logarithms; DomainError for p = 1.
double gamma(const ModelParams& params);

/// The same deviation in the normalization that divides the left side by
/// n - 1 and the right side by n:  n/(n-1) * scaling_lhs - threshold_rhs.
double gamma_corollary(const ModelParams& params);

/// Smallest K in 1..n-1 with scaling_lhs(n, K, p) > threshold_rhs(n, k),
/// or nullopt when even K = n-1 falls short. DomainError unless 0 < p < 1.
std::optional<NodeId> critical_K(NodeId n, double p, int k);

/// (log n + (k-1) log log n + gamma_target) / n, the matching ER edge
/// probability. DomainError when the result leaves [0, 1].
double er_threshold_p(NodeId n, int k, double gamma_target);

/// Law of one node's degree: Bin(K, p) + Bin(n-K-1, pK/(n-1)).
struct DegreePmf {
    NodeId n = 0;
    NodeId K = 0;
    double p = 0.0;
    std::vector<double> probs;  ///< probs[ell] = P[degree = ell], ell = 0..ell_max

    double operator[](std::size_t ell) const { return probs.at(ell); }
};

DegreePmf degree_pmf_exact(NodeId n, NodeId K, double p, std::size_t ell_max);

/// Leading-order P[degree = ell]:
/// (pK)^ell/ell! (1-p)^K (1 - pK/(n-1))^(n-K-1) (1 - K/(n-1) + 1/(1-p))^ell.
/// DomainError unless 0 < p < 1.
double degree_pmf_asymptotic(NodeId n, NodeId K, double p, std::size_t ell);

/// E[X_ell] = n P[degree = ell].
double expected_degree_count(NodeId n, NodeId K, double p, std::size_t ell);

/// log of the Binomial(trials, q) pmf at k; -inf where the mass is zero.
double log_binomial_pmf(std::size_t trials, double q, std::size_t k);

} // namespace kout
