// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "kout/connectivity.hpp"
#include "kout/generators.hpp"
#include "kout/montecarlo.hpp"
#include "kout/sweep_io.hpp"
#include "kout/thresholds.hpp"
#include "oracles.hpp"

using namespace kout;

namespace {

constexpr std::uint64_t kSeed = 1;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void edge_probability_calibration() {
    const auto start = Clock::now();
    const ModelParams params{2000, 20, 0.5, 1};
    const int graphs = 500;
    const double pairs = 2000.0 * 1999.0 / 2.0;
    double sum = 0, sum_sq = 0;
    for (int d = 0; d < graphs; ++d) {
        const double f = sample_intersection(params, {kSeed, "acceptance/edge", static_cast<std::uint64_t>(d)}).num_edges() / pairs;
        sum += f;
        sum_sq += f * f;
    }
    const double mean = sum / graphs;
    const double se = std::sqrt((sum_sq / graphs - mean * mean) / (graphs - 1));
    const double target = edge_probability(2000, 20, 0.5);
    const double elapsed = seconds_since(start);
    const bool pass = std::abs(target - 0.00995495) < 5e-9 && std::abs(mean - target) <= 3 * se && elapsed < 60;
    report(1, "edge-probability calibration", pass,
           fmt("mean=%.8f target=%.8f 3SE=%.2e time=%.1fs", mean, target, 3 * se, elapsed));
}

void degree_law_exactness() {
    double worst_enum = 0;
    for (NodeId n = 2; n <= 5; ++n) {
        for (NodeId K = 1; K <= n - 1; ++K) {
            for (double p : {0.0, 0.25, 0.5, 1.0}) {
                const auto brute = oracle::enumerate_degree_pmf(n, K, p);
                const auto pmf = degree_pmf_exact(n, K, p, n - 1);
                for (std::size_t l = 0; l < n; ++l) worst_enum = std::max(worst_enum, std::abs(pmf[l] - brute[l]));
            }
        }
    }
    double worst_conv = 0;
    for (NodeId n = 2; n <= 200; n += (n < 20 ? 1 : 9)) {
        for (NodeId K : {1u, std::max(1u, n / 4), std::max(1u, n / 2), n - 1}) {
            for (double p : {0.0, 0.01, 0.25, 0.5, 0.8, 1.0}) {
                const auto ref = oracle::bernoulli_sum_pmf(n, K, p);
                const auto pmf = degree_pmf_exact(n, K, p, n - 1);
                for (std::size_t l = 0; l < n; ++l) worst_conv = std::max(worst_conv, std::abs(pmf[l] - ref[l]));
            }
        }
    }
    report(2, "degree-law exactness", worst_enum <= 1e-12 && worst_conv <= 1e-12,
           fmt("max|exact-enumeration|=%.2e max|exact-convolution|=%.2e (tol 1e-12)", worst_enum, worst_conv));
}

struct SweepRun {
    double p;
    NodeId K_lo, K_hi;
    NodeId K_low_check, K_high_check, expected_critical;
    std::vector<SweepRow> rows;
    std::size_t implication_violations = 0;
};

SweepTable run_sweep(SweepRun& run, unsigned threads) {
    const std::vector<int> ks{2};
    SweepTable table;
    run.implication_violations = 0;
    for (NodeId K = run.K_lo; K <= run.K_hi; ++K) {
        const ModelParams params{2000, K, run.p, 2};
        const auto outcomes = run_trials(params, ks, 200, kSeed, {threads});
        for (const auto& t : outcomes) {
            if (t.kconn_flags[0] && !t.min_degree_flags[0]) ++run.implication_violations;
        }
        const auto rows = summarize(params, ks, outcomes, kSeed);
        table.insert(table.end(), rows.begin(), rows.end());
    }
    return table;
}

double p_hat_at(const SweepTable& table, NodeId K) {
    for (const auto& r : table) {
        if (r.K == K) return r.p_min_degree;
    }
    return std::nan("");
}

std::string to_csv(const SweepTable& table) {
    std::ostringstream s;
    write_sweep_csv(s, table);
    return s.str();
}

void figure_sweeps() {
    std::vector<SweepRun> runs{{0.3, 5, 30, 12, 17, 15, {}}, {0.5, 3, 20, 6, 11, 9, {}}};

    const auto start = Clock::now();
    bool transition_ok = true;
    std::string detail3;
    for (auto& run : runs) {
        run.rows = run_sweep(run, 0);
        const auto crit = critical_K(2000, run.p, 2);
        const double low = p_hat_at(run.rows, run.K_low_check);
        const double high = p_hat_at(run.rows, run.K_high_check);
        const bool ok = crit == run.expected_critical && low <= 0.10 && high >= 0.90 &&
                        run.K_low_check < *crit && *crit < run.K_high_check;
        transition_ok = transition_ok && ok;
        // Poisson reference exp(-E[X_0 + X_1]) from the exact degree law
        const auto poisson = [&](NodeId K) {
            return std::exp(-(expected_degree_count(2000, K, run.p, 0) + expected_degree_count(2000, K, run.p, 1)));
        };
        detail3 += fmt("p=%.1f critical_K=%u p_hat(K=%u)=%.3f [poisson %.3f] p_hat(K=%u)=%.3f [poisson %.3f]; ",
                       run.p, crit.value_or(0), run.K_low_check, low, poisson(run.K_low_check), run.K_high_check,
                       high, poisson(run.K_high_check));
    }
    const double elapsed = seconds_since(start);
    detail3 += fmt("time=%.1fs", elapsed);
    report(3, "zero-one transition at n=2000, k=2", transition_ok && elapsed < 600, detail3);

    double worst_gap = 0;
    std::size_t violations = 0;
    for (const auto& run : runs) {
        violations += run.implication_violations;
        for (const auto& r : run.rows) worst_gap = std::max(worst_gap, std::abs(r.p_min_degree - r.p_kconn));
    }
    report(4, "min degree >= 2 vs 2-connectivity", worst_gap <= 0.10 && violations == 0,
           fmt("max|p_hat_mindeg - p_hat_2conn|=%.3f (tol 0.10) implication violations=%zu", worst_gap, violations));

    std::string reference;
    for (auto& run : runs) reference += to_csv(run.rows);
    bool identical = true;
    for (unsigned threads : {1u, 4u, 8u}) {
        std::string again;
        for (auto& run : runs) again += to_csv(run_sweep(run, threads));
        identical = identical && again == reference;
    }
    report(9, "determinism across 1/4/8 threads", identical,
           fmt("%zu CSV bytes compared per run", reference.size()));
}

void coupling() {
    const auto audit = coupling_audit(200, 3, 6, 0.2, 0.6, 1000, kSeed);
    report(5, "coupling audit", audit.trials == 1000 && audit.nesting_violations == 0,
           fmt("trials=%zu nesting violations=%zu min-degree violations=%zu", audit.trials,
               audit.nesting_violations, audit.min_degree_violations));
}

void gamma_monotone() {
    std::size_t violations = 0;
    std::size_t checks = 0;
    for (NodeId n : {50u, 500u}) {
        for (int k : {1, 2}) {
            for (int pi = 1; pi <= 99; ++pi) {
                const double p = pi / 100.0;
                for (NodeId K = 1; K <= n - 1; ++K) {
                    const double g = gamma({n, K, p, k});
                    if (K + 1 <= n - 1) {
                        ++checks;
                        if (gamma({n, K + 1, p, k}) < g - 1e-9) ++violations;
                    }
                    if (pi < 99) {
                        ++checks;
                        if (gamma({n, K, (pi + 1) / 100.0, k}) < g - 1e-9) ++violations;
                    }
                }
            }
        }
    }
    report(6, "gamma monotone in K and p", violations == 0,
           fmt("%zu neighbouring pairs checked, %zu decreases beyond 1e-9", checks, violations));
}

void connectivity_oracle() {
    std::size_t mismatches = 0;
    const int graphs = 1000;
    for (int d = 0; d < graphs; ++d) {
        const SeedSpec seed{kSeed, "acceptance/kappa", static_cast<std::uint64_t>(d)};
        Rng pick(seed.child("shape"));
        const NodeId n = 2 + static_cast<NodeId>(pick.below(7));
        const NodeId K = 1 + static_cast<NodeId>(pick.below(n - 1));
        const double p = 0.1 + 0.9 * pick.unit();
        Graph g;
        switch (d % 3) {
            case 0: g = er_graph(n, p, seed.child("er")); break;
            case 1: g = kout_graph(sample_pairing(n, K, seed.child("kout"))); break;
            default: g = sample_intersection({n, K, p, 1}, seed.child("both")); break;
        }
        if (vertex_connectivity(g) != oracle::brute_vertex_connectivity(g)) ++mismatches;
    }
    report(7, "vertex connectivity vs exhaustive deletion", mismatches == 0,
           fmt("%d graphs with n<=8 (ER, K-out, intersection), %zu mismatches", graphs, mismatches));
}

void asymptotic_pmf() {
    bool pass = true;
    std::string detail;
    const auto exact = degree_pmf_exact(100000, 30, 0.5, 3);
    for (std::size_t l = 0; l <= 3; ++l) {
        const double ratio = degree_pmf_asymptotic(100000, 30, 0.5, l) / exact[l];
        pass = pass && ratio >= 0.95 && ratio <= 1.05;
        detail += fmt("ratio(l=%zu)=%.4f ", l, ratio);
    }
    report(8, "asymptotic degree pmf at n=1e5, K=30, p=0.5", pass, detail + "(band [0.95, 1.05])");
}

} // namespace

int main() {
    edge_probability_calibration();
    degree_law_exactness();
    figure_sweeps();
    coupling();
    gamma_monotone();
    connectivity_oracle();
    asymptotic_pmf();
    std::printf("%d criterion failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
