#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "kout/generators.hpp"

namespace kout {

/// Pairwise key created when `owner` paired to `endpoint`. `label` is the
/// rank of `endpoint` within the owner's selection (ascending ids, 1-based),
/// so (owner, label) names one of the nK keys in the pool.
struct KeyToken {
    NodeId owner = 0;
    NodeId label = 0;
    NodeId endpoint = 0;

    auto operator<=>(const KeyToken&) const = default;
};

/// Key rings of a deployment; ring(i) holds the keys node i stores.
class KeyRingTable {
public:
    NodeId num_nodes() const noexcept { return n_; }
    NodeId selections_per_node() const noexcept { return K_; }

    /// Sorted tokens stored at node i.
    std::span<const KeyToken> ring(NodeId i) const { return rings_[i - 1]; }

    friend KeyRingTable build_key_rings(const PairingTable& pairing);

private:
    NodeId n_ = 0;
    NodeId K_ = 0;
    std::vector<std::vector<KeyToken>> rings_;
};

/// Every selection j of node i yields one token stored at both i and j.
KeyRingTable build_key_rings(const PairingTable& pairing);

/// True iff nodes i and j share at least one key. Throws InvalidParameter
/// when i == j or either id is outside 1..n.
bool secure_link(const KeyRingTable& rings, NodeId i, NodeId j);

/// JSON array [{"node": i, "ring": [{"owner", "label", "endpoint"}, ...]}, ...].
std::string key_rings_to_json(const KeyRingTable& rings);

} // namespace kout
