#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kout/params.hpp"
#include "kout/seed.hpp"

namespace kout {

/// Result of one sampled intersection graph.
struct TrialOutcome {
    std::uint64_t trial_index = 0;
    std::size_t min_degree = 0;
    std::vector<int> ks;
    std::vector<bool> min_degree_flags;  ///< min degree >= ks[i]
    std::vector<bool> kconn_flags;       ///< ks[i]-connected
};

/// One (parameter point, k) estimate.
struct SweepRow {
    NodeId n = 0;
    NodeId K = 0;
    double p = 0.0;
    int k = 1;
    std::size_t trials = 0;
    double p_min_degree = 0.0;
    double p_kconn = 0.0;
    double se_min_degree = 0.0;
    double se_kconn = 0.0;
    std::uint64_t seed = 0;

    bool operator==(const SweepRow&) const = default;
};

using SweepTable = std::vector<SweepRow>;

struct RunOptions {
    /// Worker threads; 0 uses std::thread::hardware_concurrency(). Results
    /// do not depend on this value.
    unsigned threads = 0;
};

/// Samples one graph from `trial_seed` and evaluates every k in `ks`.
/// The k-connected flag comes from is_k_connected, not from the degree
/// flag, so the implication between them can be audited per trial.
TrialOutcome run_trial(const ModelParams& params, std::span<const int> ks, const SeedSpec& trial_seed);

/// Stream label of the trials at one parameter point. Trial i draws from
/// SeedSpec{master_seed, trial_stream_label(params), i}.
std::string trial_stream_label(const ModelParams& params);

/// All trial outcomes at one parameter point, ordered by trial index.
std::vector<TrialOutcome> run_trials(const ModelParams& params, std::span<const int> ks,
                                     std::size_t trials, std::uint64_t master_seed,
                                     const RunOptions& options = {});

/// Folds outcomes into one row per k (counts / trials, binomial standard
/// error sqrt(p(1-p)/trials) without continuity correction).
SweepTable summarize(const ModelParams& params, std::span<const int> ks,
                     std::span<const TrialOutcome> outcomes, std::uint64_t master_seed);

/// run_trials + summarize. Throws InvalidParameter when trials < 1.
SweepTable estimate(const ModelParams& params, std::span<const int> ks, std::size_t trials,
                    std::uint64_t master_seed, const RunOptions& options = {});

/// Values of either K or p to sweep; the other parameters come from the base.
struct SweepAxis {
    enum class Kind { K, p };
    Kind kind = Kind::K;
    std::vector<NodeId> K_values;
    std::vector<double> p_values;

    static SweepAxis over_K(std::vector<NodeId> values) { return {Kind::K, std::move(values), {}}; }
    static SweepAxis over_p(std::vector<double> values) { return {Kind::p, {}, std::move(values)}; }

    std::size_t size() const { return kind == Kind::K ? K_values.size() : p_values.size(); }
    ModelParams point(const ModelParams& base, std::size_t i) const;
};

/// estimate() at every axis point, rows in axis order then k order.
/// Throws InvalidParameter for an empty axis.
SweepTable sweep(const ModelParams& base, const SweepAxis& axis, std::span<const int> ks,
                 std::size_t trials, std::uint64_t master_seed, const RunOptions& options = {});

struct CouplingAudit {
    std::size_t trials = 0;
    std::size_t nesting_violations = 0;     ///< small graph not a subgraph of the big one
    std::size_t min_degree_violations = 0;  ///< min degree of small exceeds that of big

    bool passed() const { return nesting_violations == 0 && min_degree_violations == 0; }
};

/// Draws coupled (small, big) intersection graphs through nested_kout and
/// nested_er and checks that small is a subgraph of big in every trial.
CouplingAudit coupling_audit(NodeId n, NodeId K, NodeId K_big, double p, double p_big,
                             std::size_t trials, std::uint64_t master_seed,
                             const RunOptions& options = {});

} // namespace kout
