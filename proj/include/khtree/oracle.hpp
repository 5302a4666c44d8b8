#ifndef KHTREE_ORACLE_HPP
#define KHTREE_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "search.hpp"

namespace khtree {

/// Uniform draw in [lo, hi] by plain modulo reduction. Unlike the standard
/// distributions this gives the same stream on every library.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// k-uniform hypergraph with n in [k, max_n] and up to max_edges distinct
/// edges chosen uniformly.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int k, int max_n, int max_edges) {
    const auto n = static_cast<int>(draw(rng, k, max_n));
    std::vector<Edge> all;
    for_each_combination(1, static_cast<Vertex>(n), static_cast<Vertex>(k), [&](const std::vector<Vertex>& c) {
        all.emplace_back(c);
        return true;
    });
    const auto m = static_cast<std::size_t>(draw(rng, 0, std::min<std::int64_t>(max_edges, static_cast<std::int64_t>(all.size()))));
    for (std::size_t i = 0; i < m; ++i) {
        std::swap(all[i], all[static_cast<std::size_t>(draw(rng, static_cast<std::int64_t>(i), static_cast<std::int64_t>(all.size()) - 1))]);
    }
    all.resize(m);
    return Hypergraph::create(k, n, std::move(all));
}

struct OracleMismatch {
    std::string what;      // "semicycle" or "pair u v"
    bool optimized = false;
    bool oracle = false;
};

struct OracleComparison {
    std::size_t pairs = 0;
    std::size_t oracle_chains = 0;
    std::size_t oracle_semicycles = 0;
    std::vector<OracleMismatch> mismatches;
};

/// Compares the walk searches with brute-force enumeration: semicycle
/// existence, and for every vertex pair whether some chain contains both.
/// No chain or semicycle has more windows than there are edges, so the
/// oracle runs with max_len = |E|.
inline OracleComparison compare_with_oracle(const Hypergraph& h, const SearchOptions& opts = {},
                                            std::size_t oracle_cap = kDefaultOracleCap) {
    OracleComparison result;
    const std::size_t len = h.edge_count();
    const auto chains = oracle_enumerate(h, OracleKind::Chains, len, oracle_cap);
    const auto semicycles = oracle_enumerate(h, OracleKind::Semicycles, len, oracle_cap);
    result.oracle_chains = chains.size();
    result.oracle_semicycles = semicycles.size();

    const bool fast = find_semicycle(h, std::nullopt, opts).has_value();
    if (fast != !semicycles.empty()) {
        result.mismatches.push_back({"semicycle", fast, !semicycles.empty()});
    }

    const auto n = static_cast<std::size_t>(h.n());
    std::vector<std::vector<char>> together(n + 1, std::vector<char>(n + 1, 0));
    for (const auto& s : chains) {
        for (auto a : s) {
            for (auto b : s) {
                together[a][b] = 1;
            }
        }
    }
    for (Vertex u = 1; u <= static_cast<Vertex>(n); ++u) {
        for (Vertex v = u + 1; v <= static_cast<Vertex>(n); ++v) {
            ++result.pairs;
            const bool found = find_connecting_chain(h, u, v, std::nullopt, opts).has_value();
            if (found != static_cast<bool>(together[u][v])) {
                result.mismatches.push_back({"pair " + std::to_string(u) + " " + std::to_string(v), found,
                                             static_cast<bool>(together[u][v])});
            }
        }
    }
    return result;
}

} // namespace khtree

#endif // KHTREE_ORACLE_HPP
