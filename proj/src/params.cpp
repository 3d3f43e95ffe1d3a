#include "kout/params.hpp"

#include <cmath>
#include <string>

#include "kout/errors.hpp"

namespace kout {

void check_model_ranges(NodeId n, NodeId K, double p) {
    if (n < 2) throw InvalidParameter("n must be >= 2");
    if (K < 1 || K > n - 1) {
        throw InvalidParameter("K must lie in 1..n-1 (got K=" + std::to_string(K) +
                               ", n=" + std::to_string(n) + ")");
    }
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("p must lie in [0, 1]");
}

void ModelParams::validate() const {
    check_model_ranges(n, K, p);
    if (k < 1) throw InvalidParameter("k must be >= 1");
    if (k >= 2 && n < 3) throw InvalidParameter("n must be >= 3 when k >= 2");
}

} // namespace kout
