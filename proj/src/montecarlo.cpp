#include "kout/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "kout/connectivity.hpp"
#include "kout/errors.hpp"
#include "kout/generators.hpp"

namespace kout {

namespace {

unsigned worker_count(const RunOptions& options, std::size_t jobs) {
    unsigned threads = options.threads;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i in [0, count) on a small pool; jobs write to disjoint slots.
template <class Job>
void parallel_for(std::size_t count, const RunOptions& options, Job&& job) {
    const unsigned workers = worker_count(options, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                job(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

std::string shortest(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double binomial_se(double phat, std::size_t trials) {
    return std::sqrt(phat * (1.0 - phat) / static_cast<double>(trials));
}

} // namespace

TrialOutcome run_trial(const ModelParams& params, std::span<const int> ks, const SeedSpec& trial_seed) {
    params.validate();
    const Graph g = sample_intersection(params, trial_seed);
    TrialOutcome out;
    out.trial_index = trial_seed.index;
    out.min_degree = min_degree(g);
    out.ks.assign(ks.begin(), ks.end());
    for (int k : ks) {
        if (k < 1) throw InvalidParameter("every k must be >= 1");
        const auto kk = static_cast<std::size_t>(k);
        out.min_degree_flags.push_back(out.min_degree >= kk);
        out.kconn_flags.push_back(is_k_connected(g, kk));
    }
    return out;
}

std::string trial_stream_label(const ModelParams& params) {
    return "trial/n=" + std::to_string(params.n) + "/K=" + std::to_string(params.K) +
           "/p=" + shortest(params.p);
}

std::vector<TrialOutcome> run_trials(const ModelParams& params, std::span<const int> ks,
                                     std::size_t trials, std::uint64_t master_seed,
                                     const RunOptions& options) {
    if (trials < 1) throw InvalidParameter("trials must be >= 1");
    params.validate();
    const std::string label = trial_stream_label(params);
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, options, [&](std::size_t i) {
        outcomes[i] = run_trial(params, ks, SeedSpec{master_seed, label, i});
    });
    return outcomes;
}

SweepTable summarize(const ModelParams& params, std::span<const int> ks,
                     std::span<const TrialOutcome> outcomes, std::uint64_t master_seed) {
    if (outcomes.empty()) throw InvalidParameter("trials must be >= 1");
    SweepTable rows;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        std::size_t md = 0;
        std::size_t kc = 0;
        for (const TrialOutcome& t : outcomes) {
            md += t.min_degree_flags.at(j) ? 1 : 0;
            kc += t.kconn_flags.at(j) ? 1 : 0;
        }
        SweepRow row;
        row.n = params.n;
        row.K = params.K;
        row.p = params.p;
        row.k = ks[j];
        row.trials = outcomes.size();
        row.p_min_degree = static_cast<double>(md) / static_cast<double>(row.trials);
        row.p_kconn = static_cast<double>(kc) / static_cast<double>(row.trials);
        row.se_min_degree = binomial_se(row.p_min_degree, row.trials);
        row.se_kconn = binomial_se(row.p_kconn, row.trials);
        row.seed = master_seed;
        rows.push_back(row);
    }
    return rows;
}

SweepTable estimate(const ModelParams& params, std::span<const int> ks, std::size_t trials,
                    std::uint64_t master_seed, const RunOptions& options) {
    const auto outcomes = run_trials(params, ks, trials, master_seed, options);
    return summarize(params, ks, outcomes, master_seed);
}

ModelParams SweepAxis::point(const ModelParams& base, std::size_t i) const {
    ModelParams params = base;
    if (kind == Kind::K) {
        params.K = K_values.at(i);
    } else {
        params.p = p_values.at(i);
    }
    return params;
}

SweepTable sweep(const ModelParams& base, const SweepAxis& axis, std::span<const int> ks,
                 std::size_t trials, std::uint64_t master_seed, const RunOptions& options) {
    if (axis.size() == 0) throw InvalidParameter("sweep axis is empty");
    for (std::size_t i = 0; i < axis.size(); ++i) axis.point(base, i).validate();
    SweepTable table;
    for (std::size_t i = 0; i < axis.size(); ++i) {
        auto rows = estimate(axis.point(base, i), ks, trials, master_seed, options);
        table.insert(table.end(), rows.begin(), rows.end());
    }
    return table;
}

CouplingAudit coupling_audit(NodeId n, NodeId K, NodeId K_big, double p, double p_big,
                             std::size_t trials, std::uint64_t master_seed,
                             const RunOptions& options) {
    if (K > K_big) throw InvalidParameter("K must not exceed K_big");
    if (p > p_big) throw InvalidParameter("p must not exceed p_big");
    check_model_ranges(n, K, p);
    check_model_ranges(n, K_big, p_big);
    if (trials < 1) throw InvalidParameter("trials must be >= 1");

    std::vector<char> nested(trials, 0);
    std::vector<char> degree_ok(trials, 0);
    parallel_for(trials, options, [&](std::size_t i) {
        const SeedSpec seed{master_seed, "coupling", i};
        const auto [pair_small, pair_big] = nested_kout(n, K, K_big, seed.child("pairing"));
        const auto [er_small, er_big] = nested_er(n, p, p_big, seed.child("channel"));
        const Graph small = intersect(kout_graph(pair_small), er_small);
        const Graph big = intersect(kout_graph(pair_big), er_big);
        nested[i] = small.is_subgraph_of(big) ? 1 : 0;
        degree_ok[i] = min_degree(small) <= min_degree(big) ? 1 : 0;
    });

    CouplingAudit audit;
    audit.trials = trials;
    audit.nesting_violations = static_cast<std::size_t>(std::count(nested.begin(), nested.end(), 0));
    audit.min_degree_violations =
        static_cast<std::size_t>(std::count(degree_ok.begin(), degree_ok.end(), 0));
    return audit;
}

} // namespace kout
