#ifndef KHTREE_CORE_HPP
#define KHTREE_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"

namespace khtree {

/// A set of 1-based vertices kept in ascending order. Duplicate input
/// vertices collapse, so a malformed edge shows up as a size mismatch.
class Edge {
public:
    Edge() = default;
    Edge(std::initializer_list<Vertex> vs) : Edge(std::vector<Vertex>(vs)) {}
    explicit Edge(std::vector<Vertex> vs) : v_(std::move(vs)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }

    const std::vector<Vertex>& vertices() const noexcept { return v_; }
    std::size_t size() const noexcept { return v_.size(); }
    auto begin() const noexcept { return v_.begin(); }
    auto end() const noexcept { return v_.end(); }
    Vertex operator[](std::size_t i) const { return v_[i]; }

    bool contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

    Edge with(Vertex v) const {
        auto vs = v_;
        vs.push_back(v);
        return Edge(std::move(vs));
    }

    std::size_t intersection_size(const Edge& other) const {
        std::size_t count = 0;
        auto a = v_.begin();
        auto b = other.v_.begin();
        while (a != v_.end() && b != other.v_.end()) {
            if (*a < *b) {
                ++a;
            } else if (*b < *a) {
                ++b;
            } else {
                ++count;
                ++a;
                ++b;
            }
        }
        return count;
    }

    bool is_subset_of(const Edge& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    auto operator<=>(const Edge&) const = default;
    bool operator==(const Edge&) const = default;

private:
    std::vector<Vertex> v_;
};

inline std::string to_string(const Edge& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += std::to_string(e[i]);
    }
    return out;
}

/// Ordered vertex sequence witnessing a chain or a semicycle.
using WalkSequence = std::vector<Vertex>;

inline std::string to_string(const WalkSequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += std::to_string(s[i]);
    }
    return out;
}

/// Simple k-uniform hypergraph on vertices 1..n. Edges are unique and kept
/// in lexicographic order; the value is immutable after construction.
class Hypergraph {
public:
    static Hypergraph create(int k, int n, std::vector<Edge> edges) {
        if (k < 1) {
            throw Error(Errc::InvalidArgument, "uniformity must be at least 1");
        }
        if (k > n) {
            throw Error(Errc::UniformityExceedsOrder,
                        "k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
        }
        for (const auto& e : edges) {
            if (e.size() != static_cast<std::size_t>(k)) {
                throw Error(Errc::WrongCardinality,
                            "edge {" + to_string(e) + "} does not have " + std::to_string(k) + " vertices");
            }
            if (e[0] < 1 || e[e.size() - 1] > static_cast<Vertex>(n)) {
                throw Error(Errc::VertexOutOfRange, "edge {" + to_string(e) + "} leaves [1," + std::to_string(n) + "]");
            }
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return Hypergraph(k, n, std::move(edges));
    }

    /// Edge-free hypergraph; unlike create() this also admits n < k, which a
    /// degenerate ordered extension can produce.
    static Hypergraph edgeless(int k, int n) {
        if (k < 1 || n < 0) {
            throw Error(Errc::InvalidArgument, "bad edgeless hypergraph parameters");
        }
        return Hypergraph(k, n, {});
    }

    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    bool contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    Hypergraph with_edge(const Edge& e) const {
        auto edges = edges_;
        edges.push_back(e);
        return create(k_, n_, std::move(edges));
    }

    Hypergraph without_edge(std::size_t index) const {
        auto edges = edges_;
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(index));
        return Hypergraph(k_, n_, std::move(edges));
    }

    bool operator==(const Hypergraph&) const = default;

private:
    Hypergraph(int k, int n, std::vector<Edge> edges) : k_(k), n_(n), edges_(std::move(edges)) {}

    int k_ = 1;
    int n_ = 1;
    std::vector<Edge> edges_;
};

inline Hypergraph new_hypergraph(int k, int n, const std::vector<std::vector<Vertex>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& e : edges) {
        es.emplace_back(e);
    }
    return Hypergraph::create(k, n, std::move(es));
}

namespace detail {

// Every k-window of s must be a k-set and an edge of H, with no window repeated.
inline bool windows_are_distinct_edges(const Hypergraph& h, const WalkSequence& s) {
    const auto k = static_cast<std::size_t>(h.k());
    if (s.size() < k) {
        return false;
    }
    std::set<Edge> seen;
    for (std::size_t i = 0; i + k <= s.size(); ++i) {
        Edge window(std::vector<Vertex>(s.begin() + static_cast<std::ptrdiff_t>(i),
                                        s.begin() + static_cast<std::ptrdiff_t>(i + k)));
        if (window.size() != k || !h.contains(window)) {
            return false;
        }
        if (!seen.insert(std::move(window)).second) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// A chain: first and last vertex differ and the L-k+1 windows are distinct
/// edges of h. Every vertex of the windows' union appears in s by
/// construction, so the covering clause holds automatically.
inline bool is_chain_sequence(const Hypergraph& h, const WalkSequence& s) {
    if (s.size() < static_cast<std::size_t>(h.k()) || s.front() == s.back()) {
        return false;
    }
    return detail::windows_are_distinct_edges(h, s);
}

inline bool is_semicycle_sequence(const Hypergraph& h, const WalkSequence& s) {
    if (s.size() < static_cast<std::size_t>(h.k()) || s.front() != s.back()) {
        return false;
    }
    if (s.size() - static_cast<std::size_t>(h.k()) + 1 < 3) {
        return false;
    }
    return detail::windows_are_distinct_edges(h, s);
}

/// Edges spanned by the windows of a sequence, in window order.
inline std::vector<Edge> window_edges(int k, const WalkSequence& s) {
    std::vector<Edge> out;
    const auto kk = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i + kk <= s.size(); ++i) {
        out.emplace_back(std::vector<Vertex>(s.begin() + static_cast<std::ptrdiff_t>(i),
                                             s.begin() + static_cast<std::ptrdiff_t>(i + kk)));
    }
    return out;
}

} // namespace khtree

#endif // KHTREE_CORE_HPP
