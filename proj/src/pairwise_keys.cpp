#include "kout/pairwise_keys.hpp"

#include <algorithm>

#include <json.hpp>

#include "kout/errors.hpp"

namespace kout {

KeyRingTable build_key_rings(const PairingTable& pairing) {
    KeyRingTable t;
    t.n_ = pairing.num_nodes();
    t.K_ = pairing.selections_per_node();
    t.rings_.assign(t.n_, {});
    for (NodeId i = 1; i <= t.n_; ++i) {
        NodeId label = 0;
        for (NodeId j : pairing.selection(i)) {
            const KeyToken key{i, ++label, j};
            t.rings_[i - 1].push_back(key);
            t.rings_[j - 1].push_back(key);
        }
    }
    for (auto& ring : t.rings_) std::sort(ring.begin(), ring.end());
    return t;
}

bool secure_link(const KeyRingTable& rings, NodeId i, NodeId j) {
    const NodeId n = rings.num_nodes();
    if (i < 1 || i > n || j < 1 || j > n) throw InvalidParameter("node id outside 1..n");
    if (i == j) throw InvalidParameter("secure_link needs two distinct nodes");
    auto a = rings.ring(i);
    auto b = rings.ring(j);
    // both rings are sorted; stop at the first shared token
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            return true;
        }
    }
    return false;
}

std::string key_rings_to_json(const KeyRingTable& rings) {
    nlohmann::json doc = nlohmann::json::array();
    for (NodeId i = 1; i <= rings.num_nodes(); ++i) {
        nlohmann::json ring = nlohmann::json::array();
        for (const KeyToken& key : rings.ring(i)) {
            ring.push_back({{"owner", key.owner}, {"label", key.label}, {"endpoint", key.endpoint}});
        }
        doc.push_back({{"node", i}, {"ring", std::move(ring)}});
    }
    return doc.dump();
}

} // namespace kout
