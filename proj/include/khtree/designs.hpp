#ifndef KHTREE_DESIGNS_HPP
#define KHTREE_DESIGNS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "core.hpp"
#include "io.hpp"

namespace khtree {

/// Partition of all r-subsets of [m] into perfect matchings (factors).
struct Factorization {
    int m = 0;
    int r = 0;
    std::vector<std::vector<Edge>> factors;
};

/// S(t, k, n): every t-subset of [n] lies in exactly one block.
struct SteinerSystem {
    int t = 0;
    int k = 0;
    int n = 0;
    Hypergraph blocks = Hypergraph::edgeless(1, 0);
};

inline HypergraphFamily to_hypergraph_family(const Factorization& f) {
    HypergraphFamily family{f.m, f.r, {}};
    for (const auto& factor : f.factors) {
        family.members.push_back(Hypergraph::create(f.r, f.m, factor));
    }
    return family;
}

/// Checks the three factorization invariants: every factor partitions [m]
/// into m/r blocks, factors share no block, and together they hold every
/// r-subset. Returns an empty string when valid, otherwise the first problem.
inline std::string check_factorization(const Factorization& f) {
    if (f.r < 1 || f.m < f.r || f.m % f.r != 0) {
        return "bad parameters";
    }
    std::map<Edge, std::size_t> owner;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        const auto& factor = f.factors[i];
        if (factor.size() != static_cast<std::size_t>(f.m / f.r)) {
            return "factor " + std::to_string(i + 1) + " has " + std::to_string(factor.size()) + " blocks";
        }
        std::vector<char> hit(static_cast<std::size_t>(f.m) + 1, 0);
        for (const auto& b : factor) {
            if (b.size() != static_cast<std::size_t>(f.r)) {
                return "block {" + to_string(b) + "} has the wrong size";
            }
            for (auto v : b) {
                if (v < 1 || v > static_cast<Vertex>(f.m) || hit[v]) {
                    return "factor " + std::to_string(i + 1) + " does not partition [m]";
                }
                hit[v] = 1;
            }
            if (!owner.emplace(b, i).second) {
                return "block {" + to_string(b) + "} repeats across factors";
            }
        }
    }
    if (static_cast<std::int64_t>(owner.size()) != binomial(f.m, f.r)) {
        return "union misses some r-subsets";
    }
    return {};
}

/// Circle-method 1-factorization of the complete graph on [m]: vertex m is
/// fixed and the others rotate, giving m - 1 perfect matchings.
inline Factorization round_robin_one_factorization(int m) {
    if (m < 2 || m % 2 != 0) {
        throw Error(Errc::OddGroundSet, "round robin needs an even m >= 2, got " + std::to_string(m));
    }
    Factorization f{m, 2, {}};
    const int ring = m - 1;
    for (int round = 0; round < ring; ++round) {
        std::vector<Edge> factor;
        factor.push_back(Edge{static_cast<Vertex>(round + 1), static_cast<Vertex>(m)});
        for (int i = 1; i < m / 2; ++i) {
            const int a = (round + i) % ring;
            const int b = (round - i + ring) % ring;
            factor.push_back(Edge{static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1)});
        }
        std::sort(factor.begin(), factor.end());
        f.factors.push_back(std::move(factor));
    }
    return f;
}

namespace detail {

// Edmonds-Karp on a small dense-ish network; arcs kept in insertion order
// so augmenting paths, and therefore the result, are deterministic.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t nodes) : adj_(nodes) {}

    std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
        const std::size_t id = to_.size();
        to_.push_back(to);
        cap_.push_back(cap);
        adj_[from].push_back(id);
        to_.push_back(from);
        cap_.push_back(0);
        adj_[to].push_back(id + 1);
        return id;
    }

    std::int64_t run(std::size_t source, std::size_t sink) {
        std::int64_t total = 0;
        std::vector<std::size_t> via(adj_.size());
        while (true) {
            std::vector<char> seen(adj_.size(), 0);
            std::queue<std::size_t> frontier;
            frontier.push(source);
            seen[source] = 1;
            while (!frontier.empty() && !seen[sink]) {
                const auto u = frontier.front();
                frontier.pop();
                for (auto id : adj_[u]) {
                    const auto v = to_[id];
                    if (!seen[v] && cap_[id] > 0) {
                        seen[v] = 1;
                        via[v] = id;
                        frontier.push(v);
                    }
                }
            }
            if (!seen[sink]) {
                return total;
            }
            std::int64_t push = std::numeric_limits<std::int64_t>::max();
            for (auto v = sink; v != source; v = to_[via[v] ^ 1]) {
                push = std::min(push, cap_[via[v]]);
            }
            for (auto v = sink; v != source; v = to_[via[v] ^ 1]) {
                cap_[via[v]] -= push;
                cap_[via[v] ^ 1] += push;
            }
            total += push;
        }
    }

    // Flow carried by an arc returned from add_arc.
    std::int64_t flow(std::size_t arc) const { return cap_[arc ^ 1]; }

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> to_;
    std::vector<std::int64_t> cap_;
};

using BlockMask = std::uint64_t;

inline Edge edge_from_mask(BlockMask mask) {
    std::vector<Vertex> vs;
    for (Vertex v = 1; mask; ++v, mask >>= 1) {
        if (mask & 1) {
            vs.push_back(v);
        }
    }
    return Edge(std::move(vs));
}

} // namespace detail

/// Partitions all r-subsets of [m] into C(m-1, r-1) perfect matchings.
///
/// Ground elements are added one at a time. Every partial factor holds m/r
/// growing blocks; after i elements, each set S within [i] occurs as a block
/// exactly C(m-i, r-|S|) times over all factors. To add element i+1 each
/// factor must pick one of its blocks to grow. Spreading the choice
/// fractionally in proportion to (r - |S|)/(m - i) is feasible and hits the
/// integral targets C(m-i-1, r-|S|-1), so an integral max flow realizes it.
inline Factorization baranyai_factorization(int m, int r) {
    if (r < 1 || m < r) {
        throw Error(Errc::InvalidArgument, "need 1 <= r <= m");
    }
    if (m % r != 0) {
        throw Error(Errc::NonDivisible, std::to_string(r) + " does not divide " + std::to_string(m));
    }
    if (m > 64 || (r >= 3 && r < m && m > 12)) {
        throw Error(Errc::ResourceCap, "factorization of r=" + std::to_string(r) + ", m=" + std::to_string(m) +
                                           " is beyond the supported range");
    }
    const auto factor_count = static_cast<std::size_t>(binomial(m - 1, r - 1));
    const auto blocks_per_factor = static_cast<std::size_t>(m / r);
    std::vector<std::vector<detail::BlockMask>> partial(factor_count,
                                                        std::vector<detail::BlockMask>(blocks_per_factor, 0));

    for (int placed = 0; placed < m; ++placed) {
        const detail::BlockMask element = detail::BlockMask{1} << placed;
        // distinct partial blocks that can still grow, in ascending order
        std::map<detail::BlockMask, std::size_t> kinds;
        for (const auto& factor : partial) {
            for (auto b : factor) {
                if (std::popcount(b) < r) {
                    kinds.emplace(b, 0);
                }
            }
        }
        std::size_t next_node = 2 + factor_count;
        for (auto& [mask, node] : kinds) {
            node = next_node++;
        }
        detail::MaxFlow net(next_node);
        const std::size_t source = 0;
        const std::size_t sink = 1;
        std::vector<std::vector<std::pair<detail::BlockMask, std::size_t>>> arcs(factor_count);
        for (std::size_t p = 0; p < factor_count; ++p) {
            net.add_arc(source, 2 + p, 1);
            std::map<detail::BlockMask, std::int64_t> mult;
            for (auto b : partial[p]) {
                if (std::popcount(b) < r) {
                    ++mult[b];
                }
            }
            for (const auto& [mask, count] : mult) {
                arcs[p].emplace_back(mask, net.add_arc(2 + p, kinds.at(mask), count));
            }
        }
        const int remaining = m - placed;
        for (const auto& [mask, node] : kinds) {
            const auto target = binomial(remaining - 1, r - std::popcount(mask) - 1);
            net.add_arc(node, sink, target);
        }
        const auto value = net.run(source, sink);
        if (value != static_cast<std::int64_t>(factor_count)) {
            throw Error(Errc::DecompositionAnomaly, "balanced growth step has no integral solution");
        }
        for (std::size_t p = 0; p < factor_count; ++p) {
            for (const auto& [mask, arc] : arcs[p]) {
                if (net.flow(arc) > 0) {
                    auto it = std::find(partial[p].begin(), partial[p].end(), mask);
                    *it |= element;
                    break;
                }
            }
        }
    }

    Factorization f{m, r, {}};
    for (const auto& factor : partial) {
        std::vector<Edge> blocks;
        for (auto b : factor) {
            blocks.push_back(detail::edge_from_mask(b));
        }
        std::sort(blocks.begin(), blocks.end());
        f.factors.push_back(std::move(blocks));
    }
    return f;
}

/// True iff every t-subset of [n] lies in exactly lambda edges of h.
inline bool verify_design(const Hypergraph& h, int t, int lambda) {
    if (t < 1 || t >= h.k() + 1) {
        throw Error(Errc::InvalidArgument, "design check needs 1 <= t <= k");
    }
    std::map<std::vector<Vertex>, int> counts;
    for (const auto& e : h.edges()) {
        for_each_subset_of(e.vertices(), static_cast<std::size_t>(t), [&](const std::vector<Vertex>& s) {
            ++counts[s];
            return true;
        });
    }
    if (static_cast<std::int64_t>(counts.size()) != binomial(h.n(), t)) {
        return false;
    }
    return std::all_of(counts.begin(), counts.end(), [&](const auto& kv) { return kv.second == lambda; });
}

/// Wraps a hypergraph as S(t, k, n) after checking the design property.
inline SteinerSystem as_steiner_system(const Hypergraph& h, int t) {
    if (!verify_design(h, t, 1)) {
        throw Error(Errc::InvalidArgument, "hypergraph is not an S(" + std::to_string(t) + "," + std::to_string(h.k()) +
                                               "," + std::to_string(h.n()) + ") Steiner system");
    }
    return SteinerSystem{t, h.k(), h.n(), h};
}

/// Steiner triple system on n = 2^m - 1 points. V_j = {2^j, ..., 2^(j+1)-1};
/// the i-th round-robin matching on V_j is joined with apex i.
inline SteinerSystem doubling_sts(int m) {
    if (m < 2 || m > 20) {
        throw Error(Errc::InvalidArgument, "doubling construction needs 2 <= m <= 20");
    }
    const int n = (1 << m) - 1;
    std::vector<Edge> blocks;
    for (int j = 1; j <= m - 1; ++j) {
        const Vertex base = Vertex{1} << j;
        const auto f = round_robin_one_factorization(1 << j);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            const auto apex = static_cast<Vertex>(i + 1);
            for (const auto& pair : f.factors[i]) {
                blocks.push_back(Edge{apex, base + pair[0] - 1, base + pair[1] - 1});
            }
        }
    }
    return SteinerSystem{2, 3, n, Hypergraph::create(3, n, std::move(blocks))};
}

/// S(2, 3, n) for n = 1 or 3 (mod 6): Bose's construction for 3 (mod 6),
/// Skolem's for 1 (mod 6). Point (x, i) maps to x + i*q + 1, where q is the
/// quasigroup order; Skolem's extra point is n.
inline SteinerSystem steiner_s23(int n) {
    if (n < 3 || (n % 6 != 1 && n % 6 != 3)) {
        throw Error(Errc::InadmissibleOrder, "no S(2,3," + std::to_string(n) + ") exists");
    }
    std::vector<Edge> blocks;
    if (n % 6 == 3) {
        const int q = n / 3;  // odd
        const int half = (q + 1) / 2;
        auto point = [&](int x, int i) { return static_cast<Vertex>(x + (i % 3) * q + 1); };
        auto op = [&](int x, int y) { return ((x + y) * half) % q; };  // idempotent, commutative
        for (int x = 0; x < q; ++x) {
            blocks.push_back(Edge{point(x, 0), point(x, 1), point(x, 2)});
        }
        for (int i = 0; i < 3; ++i) {
            for (int x = 0; x < q; ++x) {
                for (int y = x + 1; y < q; ++y) {
                    blocks.push_back(Edge{point(x, i), point(y, i), point(op(x, y), i + 1)});
                }
            }
        }
    } else {
        const int t = n / 6;
        const int q = 2 * t;
        auto point = [&](int x, int i) { return static_cast<Vertex>(x + (i % 3) * q + 1); };
        const auto infinity = static_cast<Vertex>(n);
        // half-idempotent commutative quasigroup: x o x = x mod t
        auto op = [&](int x, int y) {
            const int s = (x + y) % q;
            return s % 2 == 0 ? s / 2 : (s - 1) / 2 + t;
        };
        for (int x = 0; x < t; ++x) {
            blocks.push_back(Edge{point(x, 0), point(x, 1), point(x, 2)});
        }
        for (int x = 0; x < t; ++x) {
            for (int i = 0; i < 3; ++i) {
                blocks.push_back(Edge{infinity, point(x + t, i), point(x, i + 1)});
            }
        }
        for (int i = 0; i < 3; ++i) {
            for (int x = 0; x < q; ++x) {
                for (int y = x + 1; y < q; ++y) {
                    blocks.push_back(Edge{point(x, i), point(y, i), point(op(x, y), i + 1)});
                }
            }
        }
    }
    return SteinerSystem{2, 3, n, Hypergraph::create(3, n, std::move(blocks))};
}

} // namespace khtree

#endif // KHTREE_DESIGNS_HPP
