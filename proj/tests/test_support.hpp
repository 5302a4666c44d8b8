#ifndef KHTREE_TEST_SUPPORT_HPP
#define KHTREE_TEST_SUPPORT_HPP

// Definition-level reference implementations used as oracles. They share no
// code with the search module beyond the core sequence predicates.

#include <set>
#include <string>
#include <vector>

#include "khtree/khtree.hpp"

namespace khtree::test {

inline Hypergraph complete(int k, int n) {
    std::vector<Edge> edges;
    for_each_combination(1, static_cast<Vertex>(n), static_cast<Vertex>(k), [&](const std::vector<Vertex>& c) {
        edges.emplace_back(c);
        return true;
    });
    return Hypergraph::create(k, n, std::move(edges));
}

// Every chain sequence of h, by brute force.
inline std::vector<WalkSequence> all_chains(const Hypergraph& h) {
    return oracle_enumerate(h, OracleKind::Chains, h.edge_count());
}

inline bool brute_semicycle_free(const Hypergraph& h) {
    return oracle_enumerate(h, OracleKind::Semicycles, h.edge_count()).empty();
}

inline bool brute_chain_connected(const Hypergraph& h) {
    std::set<std::pair<Vertex, Vertex>> joined;
    for (const auto& s : all_chains(h)) {
        for (auto a : s) {
            for (auto b : s) {
                if (a < b) {
                    joined.emplace(a, b);
                }
            }
        }
    }
    const auto n = static_cast<std::size_t>(h.n());
    return joined.size() == n * (n - 1) / 2;
}

inline bool brute_hypertree(const Hypergraph& h) { return brute_chain_connected(h) && brute_semicycle_free(h); }

// Longest chain by brute force; 0 for an edgeless hypergraph.
inline std::size_t brute_max_chain(const Hypergraph& h) {
    std::size_t best = 0;
    for (const auto& s : all_chains(h)) {
        best = std::max(best, s.size() - static_cast<std::size_t>(h.k()) + 1);
    }
    return best;
}

inline bool brute_edge_minimal(const Hypergraph& h) {
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        if (brute_chain_connected(h.without_edge(i))) {
            return false;
        }
    }
    return true;
}

inline bool brute_edge_maximal(const Hypergraph& h) {
    bool maximal = true;
    for_each_combination(1, static_cast<Vertex>(h.n()), static_cast<Vertex>(h.k()), [&](const std::vector<Vertex>& c) {
        const Edge s(c);
        if (!h.contains(s) && brute_semicycle_free(h.with_edge(s))) {
            maximal = false;
        }
        return maximal;
    });
    return maximal;
}

inline std::int64_t count_pairs_covered(const Hypergraph& h) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : h.edges()) {
        for (auto a : e) {
            for (auto b : e) {
                if (a < b) {
                    pairs.emplace(a, b);
                }
            }
        }
    }
    return static_cast<std::int64_t>(pairs.size());
}

} // namespace khtree::test

#endif // KHTREE_TEST_SUPPORT_HPP
