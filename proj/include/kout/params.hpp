#pragma once

#include <cstdint>

#include "kout/graph.hpp"

namespace kout {

/// Parameters of the intersection model: n nodes, K selections per node,
/// channel-on probability p, and the connectivity strength k under study.
struct ModelParams {
    NodeId n = 2000;
    NodeId K = 1;
    double p = 1.0;
    int k = 1;

    /// Throws InvalidParameter unless 1 <= K <= n-1, 0 <= p <= 1, k >= 1,
    /// and n >= 3 whenever k >= 2 (log log n must be finite and positive).
    void validate() const;
};

/// Checks n >= 2, 1 <= K <= n-1 and p in [0, 1].
void check_model_ranges(NodeId n, NodeId K, double p);

} // namespace kout
