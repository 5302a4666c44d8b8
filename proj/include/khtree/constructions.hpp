#ifndef KHTREE_CONSTRUCTIONS_HPP
#define KHTREE_CONSTRUCTIONS_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "designs.hpp"
#include "partition.hpp"
#include "search.hpp"

namespace khtree {

// Vertex layouts used below:
//   labelled partition: ground set 1..n, class label q_i = n + i
//   grid:               v_ij = (i - 1) * m + j, rows i = 1..l+1
//   matching tree:      v_ij = 2 * (i - 1) + j, j in {1, 2}

/// Tight path 1, 2, ..., n: edges {i, ..., i+k-1}.
inline Hypergraph tight_path(int n, int k) {
    std::vector<Edge> edges;
    for (int i = 1; i + k - 1 <= n; ++i) {
        std::vector<Vertex> vs(static_cast<std::size_t>(k));
        std::iota(vs.begin(), vs.end(), static_cast<Vertex>(i));
        edges.emplace_back(std::move(vs));
    }
    return Hypergraph::create(k, n, std::move(edges));
}

/// Star with kernel {1, ..., k-1} and one edge per remaining vertex.
inline Hypergraph star(int n, int k) {
    std::vector<Edge> edges;
    std::vector<Vertex> kernel(static_cast<std::size_t>(k - 1));
    std::iota(kernel.begin(), kernel.end(), Vertex{1});
    for (int v = k; v <= n; ++v) {
        auto vs = kernel;
        vs.push_back(static_cast<Vertex>(v));
        edges.emplace_back(std::move(vs));
    }
    return Hypergraph::create(k, n, std::move(edges));
}

/// Labels every class of the (k-1)-subset partition of [n] with its own new
/// vertex and adds a base hypertree on the labels: the tight path when there
/// are at least k labels, nothing when there is one.
inline Hypergraph labelled_partition_hypertree(int n, int k) {
    const auto family = build_partition(n, k);
    const auto labels = static_cast<int>(family.classes.size());
    if (labels == 0) {
        throw Error(Errc::InvalidArgument, "n is smaller than k - 1");
    }
    if (labels > 1 && labels < k) {
        throw Error(Errc::UnsupportedLabelCount, std::to_string(labels) + " labels cannot carry a " +
                                                     std::to_string(k) + "-uniform hypertree");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < labels; ++i) {
        const auto label = static_cast<Vertex>(n + i + 1);
        for (const auto& e : family.classes[static_cast<std::size_t>(i)]) {
            edges.push_back(e.with(label));
        }
    }
    if (labels >= k) {
        for (int i = 0; i + k <= labels; ++i) {
            std::vector<Vertex> vs(static_cast<std::size_t>(k));
            std::iota(vs.begin(), vs.end(), static_cast<Vertex>(n + i + 1));
            edges.emplace_back(std::move(vs));
        }
    }
    return Hypergraph::create(k, n + labels, std::move(edges));
}

/// Ordered extension of an S(k-2, k-1, n) Steiner system along `perm`: every
/// block is extended by each vertex that comes after all of the block's
/// vertices. The first k-1 vertices of perm must form a block.
inline Hypergraph ordered_extension(const SteinerSystem& g, const std::vector<Vertex>& perm) {
    const int k = g.k + 1;
    if (g.t != g.k - 1 || g.blocks.k() != g.k || g.blocks.n() != g.n) {
        throw Error(Errc::InvalidArgument, "ordered extension needs an S(k-2, k-1, n) Steiner system");
    }
    if (perm.size() != static_cast<std::size_t>(g.n)) {
        throw Error(Errc::BadPermutation, "permutation has the wrong length");
    }
    std::vector<std::size_t> position(static_cast<std::size_t>(g.n) + 1, 0);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        const Vertex v = perm[i];
        if (v < 1 || v > static_cast<Vertex>(g.n) || position[v] != 0) {
            throw Error(Errc::BadPermutation, "not a permutation of [n]");
        }
        position[v] = i + 1;
    }
    const Edge head(std::vector<Vertex>(perm.begin(), perm.begin() + g.k));
    if (!g.blocks.contains(head)) {
        throw Error(Errc::BadPermutation, "the first k-1 vertices {" + to_string(head) + "} are not a block");
    }
    if (g.n < k) {
        return Hypergraph::edgeless(k, g.n);
    }
    std::vector<Edge> edges;
    for (const auto& f : g.blocks.edges()) {
        std::size_t last = 0;
        for (auto v : f) {
            last = std::max(last, position[v]);
        }
        for (std::size_t j = last; j < perm.size(); ++j) {
            edges.push_back(f.with(perm[j]));
        }
    }
    return Hypergraph::create(k, g.n, std::move(edges));
}

inline std::vector<Vertex> identity_permutation(int n) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Vertex{1});
    return perm;
}

/// 4-uniform 2-hypertree: the identity-order extension of the doubling
/// Steiner triple system on 2^m - 1 points.
inline Hypergraph four_uniform_from_doubling(int m) {
    if (m < 3) {
        throw Error(Errc::InvalidArgument, "four-uniform doubling needs m >= 3");
    }
    const auto sts = doubling_sts(m);
    return ordered_extension(sts, identity_permutation(sts.n));
}

/// Edge-minimal 2-hypertree on an (l+1) x m grid, l = C(m-1, k-2). Row i
/// carries the i-th Baranyai factor B_i of the (k-1)-subsets of [m]; each
/// vertex of row i forms an edge with the copy of every block of B_i in
/// every later row.
inline Hypergraph edge_minimal_grid(int m, int k) {
    if (k < 3) {
        throw Error(Errc::InvalidArgument, "grid construction needs k >= 3");
    }
    if (m < 1 || m % (k - 1) != 0) {
        throw Error(Errc::DivisibilityViolation, "k-1=" + std::to_string(k - 1) + " must divide m=" + std::to_string(m));
    }
    const auto factors = baranyai_factorization(m, k - 1);
    const auto l = static_cast<int>(factors.factors.size());
    const int n = (l + 1) * m;
    auto vertex = [m](int row, int col) { return static_cast<Vertex>((row - 1) * m + col); };
    std::vector<Edge> edges;
    for (int i = 1; i <= l; ++i) {
        for (const auto& block : factors.factors[static_cast<std::size_t>(i - 1)]) {
            for (int r = i + 1; r <= l + 1; ++r) {
                std::vector<Vertex> copy;
                for (auto s : block) {
                    copy.push_back(vertex(r, static_cast<int>(s)));
                }
                for (int j = 1; j <= m; ++j) {
                    auto vs = copy;
                    vs.push_back(vertex(i, j));
                    edges.emplace_back(std::move(vs));
                }
            }
        }
    }
    return Hypergraph::create(k, n, std::move(edges));
}

/// 3-uniform edge-maximal hypertree on n = 2 * (n/2) vertices: every vertex
/// of pair i forms an edge with every earlier pair.
inline Hypergraph edge_maximal_matching_tree(int n) {
    if (n % 2 != 0) {
        throw Error(Errc::OddOrder, "matching tree needs an even n, got " + std::to_string(n));
    }
    if (n <= 2) {
        throw Error(Errc::TooSmall, "matching tree needs n > 2");
    }
    auto vertex = [](int i, int j) { return static_cast<Vertex>(2 * (i - 1) + j); };
    std::vector<Edge> edges;
    for (int i = 1; i <= n / 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            for (int p = 1; p < i; ++p) {
                edges.push_back(Edge{vertex(i, j), vertex(p, 1), vertex(p, 2)});
            }
        }
    }
    return Hypergraph::create(3, n, std::move(edges));
}

/// The complete matching {1,2}, {3,4}, ... as a 1-(n, 2, 1) design.
inline SteinerSystem perfect_matching_design(int n) {
    if (n < 2 || n % 2 != 0) {
        throw Error(Errc::OddOrder, "perfect matching needs an even n >= 2");
    }
    std::vector<Edge> edges;
    for (int i = 1; i < n; i += 2) {
        edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    }
    return SteinerSystem{1, 2, n, Hypergraph::create(2, n, std::move(edges))};
}

/// Places a copy of `base` (on vertices 1..l) on every block of an
/// S(2, l, n), mapping base vertex i to the i-th smallest block vertex.
inline Hypergraph glue(const Hypergraph& base, const SteinerSystem& steiner, const SearchOptions& opts = {}) {
    if (base.k() < 3) {
        throw Error(Errc::InvalidArgument, "gluing needs k >= 3");
    }
    if (steiner.t != 2 || steiner.k != base.n()) {
        throw Error(Errc::BlockSizeMismatch, "base has " + std::to_string(base.n()) +
                                                 " vertices but the Steiner system is S(" + std::to_string(steiner.t) +
                                                 "," + std::to_string(steiner.k) + "," + std::to_string(steiner.n) + ")");
    }
    bool minimal = false;
    try {
        minimal = static_cast<bool>(is_edge_minimal(base, opts));
    } catch (const Error& e) {
        if (e.code() != Errc::NotAHypertree) {
            throw;
        }
    }
    if (!minimal) {
        throw Error(Errc::BaseNotEdgeMinimal, "base is not an edge-minimal hypertree");
    }
    std::vector<Edge> edges;
    for (const auto& block : steiner.blocks.edges()) {
        for (const auto& e : base.edges()) {
            std::vector<Vertex> vs;
            for (auto v : e) {
                vs.push_back(block[v - 1]);
            }
            edges.emplace_back(std::move(vs));
        }
    }
    return Hypergraph::create(base.k(), steiner.n, std::move(edges));
}

struct ExtensionClause {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ExtensionReport {
    std::vector<ExtensionClause> clauses;

    bool passed() const {
        return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.passed; });
    }
};

/// Checks the premises under which an extension is a 2-hypertree: g is an
/// S(k-2, k-1, n), every edge of h contains a block of g, no two blocks are
/// mutually extended, and h is chain-connected.
inline ExtensionReport check_extension_premises(const Hypergraph& g, const Hypergraph& h, const SearchOptions& opts = {}) {
    const int k = h.k();
    if (g.k() != k - 1 || g.n() != h.n() || k < 3) {
        throw Error(Errc::InvalidArgument, "extension premises need a (k-1)-uniform g and k-uniform h, k >= 3, on one vertex set");
    }
    ExtensionReport report;

    ExtensionClause design{"steiner-system", verify_design(g, k - 2, 1), ""};
    if (!design.passed) {
        design.detail = "g is not an S(" + std::to_string(k - 2) + "," + std::to_string(k - 1) + ",n)";
    }
    report.clauses.push_back(design);

    ExtensionClause extension{"extension", true, ""};
    for (const auto& e : h.edges()) {
        bool has_kernel = false;
        for_each_subset_of(e.vertices(), static_cast<std::size_t>(k - 1), [&](const std::vector<Vertex>& f) {
            has_kernel = g.contains(Edge(f));
            return !has_kernel;
        });
        if (!has_kernel) {
            extension.passed = false;
            extension.detail = "edge {" + to_string(e) + "} contains no block";
            break;
        }
    }
    report.clauses.push_back(extension);

    ExtensionClause mutual{"no-mutual-extension", true, ""};
    const auto& blocks = g.edges();
    for (std::size_t a = 0; a < blocks.size() && mutual.passed; ++a) {
        for (std::size_t b = a + 1; b < blocks.size() && mutual.passed; ++b) {
            const auto& f1 = blocks[a];
            const auto& f2 = blocks[b];
            if (f1.intersection_size(f2) != static_cast<std::size_t>(k - 3)) {
                continue;
            }
            for (auto v1 : f1) {
                for (auto v2 : f2) {
                    if (f1.contains(v2) || f2.contains(v1)) {
                        continue;
                    }
                    if (h.contains(f1.with(v2)) && h.contains(f2.with(v1))) {
                        mutual.passed = false;
                        mutual.detail = "blocks {" + to_string(f1) + "} and {" + to_string(f2) + "} are mutually extended";
                    }
                }
            }
        }
    }
    report.clauses.push_back(mutual);

    auto connected = is_chain_connected(h, opts);
    report.clauses.push_back({"chain-connected", connected.holds, connected.holds ? "" : to_string(connected.witness)});
    return report;
}

namespace construction {

struct LabelledPartition {
    int n;
    int k;
};
struct OrderedExtension {
    SteinerSystem design;
    std::vector<Vertex> perm;
};
struct FourUniformDoubling {
    int m;
};
struct EdgeMinimalGrid {
    int m;
    int k;
};
struct EdgeMaximalMatching {
    int n;
};
struct Gluing {
    Hypergraph base;
    SteinerSystem steiner;
};

} // namespace construction

using ConstructionSpec = std::variant<construction::LabelledPartition, construction::OrderedExtension,
                                      construction::FourUniformDoubling, construction::EdgeMinimalGrid,
                                      construction::EdgeMaximalMatching, construction::Gluing>;

inline Hypergraph build(const ConstructionSpec& spec, const SearchOptions& opts = {}) {
    return std::visit(
        [&](const auto& s) -> Hypergraph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, construction::LabelledPartition>) {
                return labelled_partition_hypertree(s.n, s.k);
            } else if constexpr (std::is_same_v<T, construction::OrderedExtension>) {
                return ordered_extension(s.design, s.perm);
            } else if constexpr (std::is_same_v<T, construction::FourUniformDoubling>) {
                return four_uniform_from_doubling(s.m);
            } else if constexpr (std::is_same_v<T, construction::EdgeMinimalGrid>) {
                return edge_minimal_grid(s.m, s.k);
            } else if constexpr (std::is_same_v<T, construction::EdgeMaximalMatching>) {
                return edge_maximal_matching_tree(s.n);
            } else {
                return glue(s.base, s.steiner, opts);
            }
        },
        spec);
}

/// Closed-form edge count of each family, evaluated without building it.
inline std::int64_t predicted_edge_count(const ConstructionSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::int64_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, construction::LabelledPartition>) {
                const auto labels = partition_class_count(s.n, s.k - 1);
                const std::int64_t base = labels >= s.k ? labels - s.k + 1 : 0;
                return binomial(s.n, s.k - 1) + base;
            } else if constexpr (std::is_same_v<T, construction::OrderedExtension>) {
                // each block is extended once per vertex after its last one
                std::vector<std::int64_t> position(static_cast<std::size_t>(s.design.n) + 1, 0);
                for (std::size_t i = 0; i < s.perm.size(); ++i) {
                    position[s.perm[i]] = static_cast<std::int64_t>(i + 1);
                }
                std::int64_t total = 0;
                for (const auto& f : s.design.blocks.edges()) {
                    std::int64_t last = 0;
                    for (auto v : f) {
                        last = std::max(last, position[v]);
                    }
                    total += s.design.n - last;
                }
                return total;
            } else if constexpr (std::is_same_v<T, construction::FourUniformDoubling>) {
                const std::int64_t top = (std::int64_t{1} << s.m) - 1;
                std::int64_t total = 0;
                for (int j = 1; j <= s.m - 1; ++j) {
                    const std::int64_t lo = std::int64_t{1} << j;
                    for (std::int64_t i = lo; i <= 2 * lo - 1; ++i) {
                        total += (i - lo) * (top - i);
                    }
                }
                return total;
            } else if constexpr (std::is_same_v<T, construction::EdgeMinimalGrid>) {
                const auto l = binomial(s.m - 1, s.k - 2);
                return binomial(l + 1, 2) * s.m * s.m / (s.k - 1);
            } else if constexpr (std::is_same_v<T, construction::EdgeMaximalMatching>) {
                return static_cast<std::int64_t>(s.n) * (s.n - 2) / 4;
            } else {
                return static_cast<std::int64_t>(s.base.edge_count()) *
                       static_cast<std::int64_t>(s.steiner.blocks.edge_count());
            }
        },
        spec);
}

} // namespace khtree

#endif // KHTREE_CONSTRUCTIONS_HPP
