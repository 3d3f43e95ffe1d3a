#include <doctest.h>

#include <json.hpp>
#include <set>

#include "kout/errors.hpp"
#include "kout/generators.hpp"
#include "kout/pairwise_keys.hpp"

using namespace kout;

TEST_CASE("key rings for n=2, K=1") {
    const auto rings = build_key_rings(sample_pairing(2, 1, {}));
    const std::vector<KeyToken> expected{{1, 1, 2}, {2, 1, 1}};
    CHECK(std::ranges::equal(rings.ring(1), expected));
    CHECK(std::ranges::equal(rings.ring(2), expected));
    CHECK(secure_link(rings, 1, 2));
}

TEST_CASE("key rings for a hand-built pairing") {
    const auto pairing = PairingTable::from_sets(3, 1, {{2}, {1}, {1}});
    const auto rings = build_key_rings(pairing);
    CHECK(rings.ring(1).size() == 3);
    CHECK(rings.ring(2).size() == 2);
    CHECK(rings.ring(3).size() == 1);
    CHECK_FALSE(secure_link(rings, 2, 3));
    CHECK(secure_link(rings, 1, 3));
    // mutual pairing: both distinct keys stored at both ends
    CHECK(std::ranges::count(rings.ring(1), KeyToken{2, 1, 1}) == 1);
    CHECK(std::ranges::count(rings.ring(2), KeyToken{1, 1, 2}) == 1);
    CHECK_THROWS_AS(secure_link(rings, 2, 2), InvalidParameter);
    CHECK_THROWS_AS(secure_link(rings, 0, 2), InvalidParameter);
}

TEST_CASE("labels are ascending-id ranks") {
    const auto pairing = PairingTable::from_sets(4, 2, {{4, 2}, {1, 3}, {4, 1}, {3, 2}});
    const auto rings = build_key_rings(pairing);
    CHECK(std::ranges::count(rings.ring(1), KeyToken{1, 1, 2}) == 1);
    CHECK(std::ranges::count(rings.ring(1), KeyToken{1, 2, 4}) == 1);
    CHECK(std::ranges::count(rings.ring(4), KeyToken{1, 2, 4}) == 1);
}

TEST_CASE("ring identities and secure-link equivalence over random pairings") {
    const NodeId n = 10;
    const NodeId K = 3;
    for (std::uint64_t d = 0; d < 10000; ++d) {
        const auto pairing = sample_pairing(n, K, {17, "rings", d});
        const auto rings = build_key_rings(pairing);
        const Graph h = kout_graph(pairing);

        std::set<std::pair<NodeId, NodeId>> keys;
        std::size_t total = 0;
        bool ok = true;
        for (NodeId i = 1; i <= n; ++i) {
            std::size_t indegree = 0;
            for (NodeId j = 1; j <= n; ++j) indegree += (j != i && pairing.selected(j, i)) ? 1 : 0;
            ok = ok && rings.ring(i).size() == K + indegree;
            total += rings.ring(i).size();
            for (const KeyToken& key : rings.ring(i)) {
                keys.insert({key.owner, key.label});
                ok = ok && pairing.selected(key.owner, key.endpoint) && (i == key.owner || i == key.endpoint);
            }
            for (NodeId j = i + 1; j <= n; ++j) ok = ok && secure_link(rings, i, j) == h.has_edge(i, j);
        }
        REQUIRE(ok);
        REQUIRE(keys.size() == n * K);
        REQUIRE(total == 2 * n * K);
    }
}

TEST_CASE("key ring JSON dump") {
    const auto rings = build_key_rings(sample_pairing(2, 1, {}));
    const auto doc = nlohmann::json::parse(key_rings_to_json(rings));
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["node"] == 1);
    CHECK(doc[0]["ring"].size() == 2);
    CHECK(doc[1]["ring"][0]["owner"] == 1);
    CHECK(doc[1]["ring"][0]["label"] == 1);
    CHECK(doc[1]["ring"][0]["endpoint"] == 2);
}
