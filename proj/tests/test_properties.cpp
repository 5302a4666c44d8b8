#include <gtest/gtest.h>

#include <random>

#include "khtree/khtree.hpp"
#include "test_support.hpp"

using namespace khtree;

namespace {

// Random hypertree: add k-sets in random order while no semicycle appears,
// then drop random edges as long as chain-connectivity survives. Returns
// nothing if the greedy phase did not end chain-connected.
std::optional<Hypergraph> random_hypertree(std::mt19937_64& rng, int k, int n, int drops) {
    std::vector<Edge> all;
    for_each_combination(1, static_cast<Vertex>(n), static_cast<Vertex>(k), [&](const std::vector<Vertex>& c) {
        all.emplace_back(c);
        return true;
    });
    for (std::size_t i = all.size(); i > 1; --i) {
        std::swap(all[i - 1], all[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(i) - 1))]);
    }
    auto h = Hypergraph::edgeless(k, n);
    for (const auto& e : all) {
        auto g = h.with_edge(e);
        if (test::brute_semicycle_free(g)) {
            h = std::move(g);
        }
    }
    if (!test::brute_chain_connected(h)) {
        return std::nullopt;
    }
    for (int d = 0; d < drops && h.edge_count() > 1; ++d) {
        const auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(h.edge_count()) - 1));
        auto g = h.without_edge(i);
        if (test::brute_chain_connected(g)) {
            h = std::move(g);
        }
    }
    return h;
}

} // namespace

TEST(Properties, SearchesMatchTheOracle) {
    std::mt19937_64 rng(20261018);
    for (int i = 0; i < 150; ++i) {
        const int k = static_cast<int>(draw(rng, 2, 4));
        const auto h = random_hypergraph(rng, k, 7, 9);
        const auto c = compare_with_oracle(h);
        EXPECT_TRUE(c.mismatches.empty()) << serialize(h);
        EXPECT_EQ(is_hypertree(h).holds, test::brute_hypertree(h)) << serialize(h);
        if (!h.empty()) {
            EXPECT_EQ(max_chain_length(h, h.edge_count()), test::brute_max_chain(h)) << serialize(h);
        }
    }
}

TEST(Properties, EdgeMinimalAndMaximalMatchBruteForce) {
    std::mt19937_64 rng(7);
    int trees = 0;
    for (int i = 0; i < 80; ++i) {
        const int k = static_cast<int>(draw(rng, 2, 3));
        const int n = static_cast<int>(draw(rng, k + 1, k == 2 ? 8 : 7));
        const auto h = random_hypertree(rng, k, n, static_cast<int>(draw(rng, 0, 6)));
        if (!h) {
            continue;
        }
        ++trees;
        ASSERT_TRUE(is_hypertree(*h)) << serialize(*h);
        const auto minimal = is_edge_minimal(*h);
        const auto maximal = is_edge_maximal(*h);
        EXPECT_EQ(minimal.holds, test::brute_edge_minimal(*h)) << serialize(*h);
        EXPECT_EQ(maximal.holds, test::brute_edge_maximal(*h)) << serialize(*h);
        if (!minimal) {
            const auto& edges = h->edges();
            const auto it = std::find(edges.begin(), edges.end(), *minimal.witness.edge);
            ASSERT_NE(it, edges.end());
            EXPECT_TRUE(test::brute_chain_connected(h->without_edge(static_cast<std::size_t>(it - edges.begin()))));
        }
        if (!maximal) {
            EXPECT_TRUE(test::brute_semicycle_free(h->with_edge(*maximal.witness.edge)));
        }
    }
    EXPECT_GE(trees, 40);
}

TEST(Properties, TwoHypertreeRuleMatchesGeneralSearch) {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        const auto h = random_hypertree(rng, 3, static_cast<int>(draw(rng, 4, 7)), 0);
        if (!h || max_chain_length(*h, 2) > 2) {
            continue;
        }
        ++checked;
        for (Vertex u = 1; u <= static_cast<Vertex>(h->n()); ++u) {
            for (Vertex v = u + 1; v <= static_cast<Vertex>(h->n()); ++v) {
                EXPECT_EQ(find_connecting_chain_two_hypertree(*h, u, v).has_value(),
                          find_connecting_chain(*h, u, v).has_value());
            }
        }
    }
    EXPECT_GT(checked, 5);
}

TEST(Properties, ChainsOfSemicycleFreeHostsHaveDistinctVertices) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        const auto h = random_hypergraph(rng, 3, 7, 8);
        if (!test::brute_semicycle_free(h)) {
            continue;
        }
        for (const auto& s : test::all_chains(h)) {
            std::set<Vertex> distinct(s.begin(), s.end());
            EXPECT_EQ(distinct.size(), s.size()) << to_string(s);
        }
    }
}

TEST(Properties, SerializationRoundTrips) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto h = random_hypergraph(rng, static_cast<int>(draw(rng, 1, 5)), 9, 20);
        const auto text = serialize(h);
        EXPECT_EQ(parse(text), h);
        EXPECT_EQ(serialize(parse(text)), text);
    }
}

TEST(Properties, WitnessesReplay) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const auto h = random_hypergraph(rng, 3, 7, 8);
        const auto v = is_hypertree(h);
        if (v) {
            continue;
        }
        if (v.witness.kind == WitnessKind::Semicycle) {
            EXPECT_TRUE(is_semicycle_sequence(h, *v.witness.sequence));
        } else {
            ASSERT_EQ(v.witness.kind, WitnessKind::DisconnectedPair);
            const auto [a, b] = *v.witness.pair;
            EXPECT_FALSE(find_connecting_chain(h, a, b));
            bool together = false;
            for (const auto& s : test::all_chains(h)) {
                together = together || (std::count(s.begin(), s.end(), a) && std::count(s.begin(), s.end(), b));
            }
            EXPECT_FALSE(together);
        }
    }
}

TEST(Properties, ConstructionsAreDeterministic) {
    for (int rep = 0; rep < 2; ++rep) {
        EXPECT_EQ(serialize(four_uniform_from_doubling(4)), serialize(four_uniform_from_doubling(4)));
        EXPECT_EQ(serialize(glue(new_hypergraph(3, 3, {{1, 2, 3}}), steiner_s23(15))),
                  serialize(glue(new_hypergraph(3, 3, {{1, 2, 3}}), steiner_s23(15))));
    }
}
