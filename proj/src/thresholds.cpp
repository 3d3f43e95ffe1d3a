#include "kout/thresholds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "kout/errors.hpp"

namespace kout {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_p_below_one(double p) {
    if (!(p < 1.0)) throw DomainError("p must be < 1");
}

double log_choose(std::size_t a, std::size_t b) {
    return std::lgamma(static_cast<double>(a) + 1.0) - std::lgamma(static_cast<double>(b) + 1.0) -
           std::lgamma(static_cast<double>(a - b) + 1.0);
}

} // namespace

double log_binomial_pmf(std::size_t trials, double q, std::size_t k) {
    if (k > trials) return kNegInf;
    if (q <= 0.0) return k == 0 ? 0.0 : kNegInf;
    if (q >= 1.0) return k == trials ? 0.0 : kNegInf;
    return log_choose(trials, k) + static_cast<double>(k) * std::log(q) +
           static_cast<double>(trials - k) * std::log1p(-q);
}

double scaling_lhs(NodeId n, NodeId K, double p) {
    check_model_ranges(n, K, p);
    require_p_below_one(p);
    const double k_real = K;
    return p * k_real - k_real * std::log1p(-p) - p * k_real * k_real / static_cast<double>(n - 1);
}

double threshold_rhs(NodeId n, int k) {
    if (k < 1) throw InvalidParameter("k must be >= 1");
    if (k >= 2 && n < 3) throw InvalidParameter("n must be >= 3 when k >= 2");
    const double log_n = std::log(static_cast<double>(n));
    return k == 1 ? log_n : log_n + (k - 1) * std::log(log_n);
}

double gamma(const ModelParams& params) {
    require_p_below_one(params.p);
    params.validate();
    return scaling_lhs(params.n, params.K, params.p) - threshold_rhs(params.n, params.k);
}

double gamma_corollary(const ModelParams& params) {
    require_p_below_one(params.p);
    params.validate();
    const double n = params.n;
    return n / (n - 1.0) * scaling_lhs(params.n, params.K, params.p) -
           threshold_rhs(params.n, params.k);
}

std::optional<NodeId> critical_K(NodeId n, double p, int k) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(p >= 1.0 ? "p must be < 1" : "p must be > 0");
    }
    const double target = threshold_rhs(n, k);
    auto holds = [&](NodeId K) { return scaling_lhs(n, K, p) > target; };
    if (n < 2 || !holds(n - 1)) return std::nullopt;

    // The left side increases with K, so bisect for the first K that holds.
    NodeId lo = 1;
    NodeId hi = n - 1;
    while (lo < hi) {
        const NodeId mid = lo + (hi - lo) / 2;
        if (holds(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if (lo == 1 || !holds(lo - 1)) return lo;

    // Rounding broke monotonicity near the boundary: take the start of the
    // run of K values, ending at n-1, on which the inequality holds.
    NodeId K = n - 1;
    while (K > 1 && holds(K - 1)) --K;
    return K;
}

double er_threshold_p(NodeId n, int k, double gamma_target) {
    if (n < 2) throw InvalidParameter("n must be >= 2");
    const double p = (threshold_rhs(n, k) + gamma_target) / static_cast<double>(n);
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("ER threshold probability " + std::to_string(p) + " lies outside [0, 1]");
    }
    return p;
}

DegreePmf degree_pmf_exact(NodeId n, NodeId K, double p, std::size_t ell_max) {
    check_model_ranges(n, K, p);
    if (ell_max > n - 1) throw InvalidParameter("ell_max must be <= n-1");
    const std::size_t outside = n - K - 1;  // nodes that may select us
    const double q = p * static_cast<double>(K) / static_cast<double>(n - 1);

    DegreePmf pmf{n, K, p, std::vector<double>(ell_max + 1, 0.0)};
    for (std::size_t ell = 0; ell <= ell_max; ++ell) {
        double sum = 0.0;
        for (std::size_t i = 0; i <= ell && i <= outside; ++i) {
            const std::size_t own = ell - i;
            if (own > K) continue;
            const double log_term = log_binomial_pmf(outside, q, i) + log_binomial_pmf(K, p, own);
            if (log_term != kNegInf) sum += std::exp(log_term);
        }
        pmf.probs[ell] = std::min(sum, 1.0);
    }
    return pmf;
}

double degree_pmf_asymptotic(NodeId n, NodeId K, double p, std::size_t ell) {
    check_model_ranges(n, K, p);
    if (!(p > 0.0 && p < 1.0)) throw DomainError("asymptotic degree law needs 0 < p < 1");
    const double nm1 = static_cast<double>(n - 1);
    const double k_real = K;
    const double l = static_cast<double>(ell);
    const double log_value = l * std::log(p * k_real) - std::lgamma(l + 1.0) +
                             k_real * std::log1p(-p) +
                             static_cast<double>(n - K - 1) * std::log1p(-p * k_real / nm1) +
                             l * std::log(1.0 - k_real / nm1 + 1.0 / (1.0 - p));
    return std::exp(log_value);
}

double expected_degree_count(NodeId n, NodeId K, double p, std::size_t ell) {
    check_model_ranges(n, K, p);
    if (ell > n - 1) return 0.0;
    return static_cast<double>(n) * degree_pmf_exact(n, K, p, ell)[ell];
}

} // namespace kout
