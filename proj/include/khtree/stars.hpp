#ifndef KHTREE_STARS_HPP
#define KHTREE_STARS_HPP

#include <algorithm>
#include <iomanip>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "search.hpp"

namespace khtree {

struct Star {
    Edge kernel;
    std::vector<Edge> edges;
};

/// Maximal stars of a 2-hypertree with their size profile.
struct StarDecomposition {
    int n = 0;
    int k = 0;
    std::vector<Star> stars;                      // ordered by kernel
    std::map<std::size_t, std::int64_t> profile;  // star size i -> C_i
    std::int64_t uncovered = 0;                   // (k-1)-sets in no edge
};

enum class StarPrecondition {
    // hypertree whose chains have at most 2 edges
    TwoHypertree,
    // semicycle-free with chains of at most 2 edges; chain-connectivity is
    // not required (sub-hypergraphs of 2-hypertrees)
    ShortChainsNoSemicycle,
};

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

private:
    std::vector<std::size_t> parent_;
};

inline void require_short_chains(const Hypergraph& h, StarPrecondition pre, const SearchOptions& opts) {
    if (pre == StarPrecondition::TwoHypertree) {
        auto tree = is_hypertree(h, opts);
        if (!tree) {
            throw Error(Errc::Not2Hypertree, "not a hypertree (" + to_string(tree.witness) + ")");
        }
    } else if (auto s = find_semicycle(h, std::nullopt, opts)) {
        throw Error(Errc::Not2Hypertree, "contains semicycle " + to_string(*s));
    }
    if (h.empty()) {
        return;
    }
    auto inner = opts;
    inner.host_semicycle_free = true;
    if (max_chain_length(h, 2, inner) > 2) {
        throw Error(Errc::Not2Hypertree, "has a chain with 3 or more edges");
    }
}

} // namespace detail

/// Splits the edges into maximal stars. Edges meeting in k-1 vertices are
/// grouped; in a 2-hypertree each group is a star whose kernel is the common
/// intersection. A lone edge takes its lexicographically smallest
/// (k-1)-subset as kernel.
inline StarDecomposition decompose_stars(const Hypergraph& h,
                                         StarPrecondition pre = StarPrecondition::TwoHypertree,
                                         const SearchOptions& opts = {}) {
    detail::require_short_chains(h, pre, opts);
    const auto k = static_cast<std::size_t>(h.k());
    const auto& edges = h.edges();

    std::map<std::vector<Vertex>, std::vector<std::size_t>> by_subset;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for_each_subset_of(edges[i].vertices(), k - 1, [&](const std::vector<Vertex>& s) {
            by_subset[s].push_back(i);
            return true;
        });
    }
    detail::DisjointSets groups(edges.size());
    for (const auto& [subset, ids] : by_subset) {
        for (std::size_t j = 1; j < ids.size(); ++j) {
            groups.unite(ids[0], ids[j]);
        }
    }
    std::map<std::size_t, std::vector<Edge>> members;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        members[groups.find(i)].push_back(edges[i]);
    }

    StarDecomposition d;
    d.n = h.n();
    d.k = h.k();
    for (auto& [root, group] : members) {
        Star s;
        if (group.size() == 1) {
            s.kernel = Edge(std::vector<Vertex>(group[0].begin(), group[0].begin() + static_cast<std::ptrdiff_t>(k - 1)));
        } else {
            std::vector<Vertex> common = group[0].vertices();
            for (std::size_t j = 1; j < group.size(); ++j) {
                std::vector<Vertex> next;
                std::set_intersection(common.begin(), common.end(), group[j].begin(), group[j].end(),
                                      std::back_inserter(next));
                common = std::move(next);
            }
            if (common.size() != k - 1) {
                throw Error(Errc::DecompositionAnomaly, "edges around {" + to_string(group[0]) + "} do not form a star");
            }
            s.kernel = Edge(std::move(common));
        }
        s.edges = std::move(group);
        ++d.profile[s.edges.size()];
        d.stars.push_back(std::move(s));
    }
    std::sort(d.stars.begin(), d.stars.end(), [](const Star& a, const Star& b) { return a.kernel < b.kernel; });
    d.uncovered = binomial(h.n(), h.k() - 1) - static_cast<std::int64_t>(by_subset.size());
    return d;
}

/// Both sides of the star equation with every term.
struct StarLedger {
    StarDecomposition decomposition;
    std::int64_t subsets = 0;         // C(n, k-1)
    std::int64_t star_count = 0;      // sum C_i
    std::int64_t weighted_count = 0;  // sum i * C_i
    std::int64_t edges = 0;           // |E|
    std::int64_t counted = 0;         // l + sum C_i + (k-1) sum i C_i
    bool subsets_identity = false;    // subsets == counted
    bool edges_identity = false;      // weighted_count == edges

    bool holds() const { return subsets_identity && edges_identity; }
};

inline StarLedger check_star_equation(const Hypergraph& h, StarPrecondition pre = StarPrecondition::TwoHypertree,
                                      const SearchOptions& opts = {}) {
    StarLedger ledger;
    ledger.decomposition = decompose_stars(h, pre, opts);
    for (const auto& [size, count] : ledger.decomposition.profile) {
        ledger.star_count += count;
        ledger.weighted_count += static_cast<std::int64_t>(size) * count;
    }
    ledger.subsets = binomial(h.n(), h.k() - 1);
    ledger.edges = static_cast<std::int64_t>(h.edge_count());
    ledger.counted = ledger.decomposition.uncovered + ledger.star_count + (h.k() - 1) * ledger.weighted_count;
    ledger.subsets_identity = ledger.subsets == ledger.counted;
    ledger.edges_identity = ledger.weighted_count == ledger.edges;
    return ledger;
}

inline std::string render(const StarLedger& ledger) {
    std::ostringstream out;
    const int k = ledger.decomposition.k;
    out << "   i        C_i      i*C_i\n";
    for (const auto& [size, count] : ledger.decomposition.profile) {
        out << std::setw(4) << size << ' ' << std::setw(10) << count << ' ' << std::setw(10)
            << static_cast<std::int64_t>(size) * count << '\n';
    }
    out << "uncovered l = " << ledger.decomposition.uncovered << '\n';
    out << "sum C_i = " << ledger.star_count << ", sum i*C_i = " << ledger.weighted_count << ", |E| = " << ledger.edges
        << '\n';
    out << "C(n,k-1) = " << ledger.subsets << "  vs  l + sum C_i + " << (k - 1) << "*sum i*C_i = " << ledger.counted
        << "  [" << (ledger.subsets_identity ? "OK" : "MISMATCH") << "]\n";
    out << "sum i*C_i = " << ledger.weighted_count << "  vs  |E| = " << ledger.edges << "  ["
        << (ledger.edges_identity ? "OK" : "MISMATCH") << "]\n";
    return out.str();
}

} // namespace khtree

#endif // KHTREE_STARS_HPP
