#ifndef KHTREE_PARTITION_HPP
#define KHTREE_PARTITION_HPP

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "io.hpp"
#include "search.hpp"

namespace khtree {

/// Partition of all lambda-subsets of [n] into classes.
struct PartitionFamily {
    int n = 0;
    int lambda = 0;
    std::vector<std::vector<Edge>> classes;
};

/// F(n, lambda): the class count the recursive construction produces,
/// evaluated from the recurrence alone.
inline std::int64_t partition_class_count(std::int64_t n, std::int64_t lambda) {
    if (lambda == 1) {
        return 1;
    }
    if (n == lambda) {
        return 1;
    }
    if (n < lambda) {
        return 0;
    }
    std::int64_t total = partition_class_count(n / 2, lambda);
    for (std::int64_t mu = 1; mu <= lambda - 1; ++mu) {
        total += partition_class_count(n / 2, mu) * partition_class_count(n / 2, lambda - mu);
    }
    return total;
}

namespace detail {

using Classes = std::vector<std::vector<Edge>>;

inline Classes shift_classes(const Classes& classes, Vertex by) {
    Classes out;
    out.reserve(classes.size());
    for (const auto& cls : classes) {
        std::vector<Edge> shifted;
        shifted.reserve(cls.size());
        for (const auto& e : cls) {
            std::vector<Vertex> vs(e.begin(), e.end());
            for (auto& v : vs) {
                v += by;
            }
            shifted.emplace_back(std::move(vs));
        }
        out.push_back(std::move(shifted));
    }
    return out;
}

// Classes of lambda-subsets of [n] (vertices 1..n). Results are memoized
// per (n, lambda); the second half reuses the first half's family shifted.
inline const Classes& build_classes(int n, int lambda, std::map<std::pair<int, int>, Classes>& memo) {
    const auto key = std::make_pair(n, lambda);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    Classes result;
    if (lambda == 1) {
        std::vector<Edge> singles;
        for (Vertex v = 1; v <= static_cast<Vertex>(n); ++v) {
            singles.push_back(Edge{v});
        }
        result.push_back(std::move(singles));
    } else if (n == lambda) {
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        result.push_back({Edge(all)});
    } else if (n > lambda) {
        const int half = n / 2;
        const auto by = static_cast<Vertex>(half);
        // Q*: class i of the first half joined with class i of the second half
        {
            const Classes low = build_classes(half, lambda, memo);
            const Classes high = shift_classes(low, by);
            for (std::size_t i = 0; i < low.size(); ++i) {
                std::vector<Edge> cls = low[i];
                cls.insert(cls.end(), high[i].begin(), high[i].end());
                result.push_back(std::move(cls));
            }
        }
        // Q^mu: products of a mu-class on the first half with a
        // (lambda - mu)-class on the second half, row-major in (i, j)
        for (int mu = 1; mu <= lambda - 1; ++mu) {
            const Classes low = build_classes(half, mu, memo);
            const Classes high = shift_classes(build_classes(half, lambda - mu, memo), by);
            for (const auto& a_cls : low) {
                for (const auto& b_cls : high) {
                    std::vector<Edge> cls;
                    cls.reserve(a_cls.size() * b_cls.size());
                    for (const auto& a : a_cls) {
                        for (const auto& b : b_cls) {
                            std::vector<Vertex> vs(a.begin(), a.end());
                            vs.insert(vs.end(), b.begin(), b.end());
                            cls.emplace_back(std::move(vs));
                        }
                    }
                    result.push_back(std::move(cls));
                }
            }
        }
    }
    for (auto& cls : result) {
        std::sort(cls.begin(), cls.end());
    }
    return memo.emplace(key, std::move(result)).first->second;
}

} // namespace detail

/// Recursive partition of the (k-1)-subsets of [n] for n a power of two.
/// Halving uses {1..n/2} and {n/2+1..n}; classes are ordered with the
/// paired classes first, then the product blocks for mu = 1..k-2.
inline PartitionFamily build_partition(int n, int k) {
    if (k < 2) {
        throw Error(Errc::InvalidArgument, "partition needs k >= 2");
    }
    if (!is_power_of_two(n)) {
        throw Error(Errc::NotPowerOfTwo, "n=" + std::to_string(n) + " is not a power of two");
    }
    std::map<std::pair<int, int>, detail::Classes> memo;
    PartitionFamily family;
    family.n = n;
    family.lambda = k - 1;
    family.classes = detail::build_classes(n, k - 1, memo);
    return family;
}

inline HypergraphFamily to_hypergraph_family(const PartitionFamily& p) {
    HypergraphFamily family{p.n, p.lambda, {}};
    for (const auto& cls : p.classes) {
        family.members.push_back(Hypergraph::create(p.lambda, p.n, cls));
    }
    return family;
}

inline PartitionFamily from_hypergraph_family(const HypergraphFamily& f) {
    PartitionFamily p{f.n, f.lambda, {}};
    for (const auto& h : f.members) {
        p.classes.push_back(h.edges());
    }
    return p;
}

struct PartitionCheck {
    std::string name;
    bool passed = true;
    std::string detail;
    std::optional<WalkSequence> witness;
};

struct PartitionReport {
    std::size_t class_count = 0;
    std::vector<PartitionCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }
};

/// Checks a family against the five partition properties: disjoint classes,
/// union equal to all (k-1)-subsets, every class covering [n], no class
/// holding a semicycle with at most k edges, and at most (log2 n)^(k-2)
/// classes.
inline PartitionReport verify_partition(const PartitionFamily& p, int k, const SearchOptions& opts = {}) {
    PartitionReport report;
    report.class_count = p.classes.size();
    const int lambda = k - 1;

    PartitionCheck disjoint{"disjoint", true, "", {}};
    PartitionCheck exhaustive{"union", true, "", {}};
    std::set<Edge> seen;
    std::size_t total = 0;
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        for (const auto& e : p.classes[i]) {
            ++total;
            if (e.size() != static_cast<std::size_t>(lambda)) {
                exhaustive.passed = false;
                exhaustive.detail = "member {" + to_string(e) + "} has the wrong size";
            }
            if (!seen.insert(e).second && disjoint.passed) {
                disjoint.passed = false;
                disjoint.detail = "{" + to_string(e) + "} appears in more than one class (class " + std::to_string(i + 1) + ")";
            }
        }
    }
    if (exhaustive.passed) {
        const auto expected = binomial(p.n, lambda);
        if (static_cast<std::int64_t>(seen.size()) != expected) {
            exhaustive.passed = false;
            exhaustive.detail = std::to_string(seen.size()) + " distinct subsets, expected " + std::to_string(expected);
        }
        for (const auto& e : seen) {
            if (e.size() && (e[0] < 1 || e[e.size() - 1] > static_cast<Vertex>(p.n))) {
                exhaustive.passed = false;
                exhaustive.detail = "member {" + to_string(e) + "} leaves [n]";
            }
        }
    }
    if (disjoint.passed) {
        disjoint.detail = std::to_string(total) + " members";
    }
    report.checks.push_back(disjoint);
    report.checks.push_back(exhaustive);

    PartitionCheck covers{"covers", true, "", {}};
    for (std::size_t i = 0; i < p.classes.size() && covers.passed; ++i) {
        std::vector<char> hit(static_cast<std::size_t>(p.n) + 1, 0);
        for (const auto& e : p.classes[i]) {
            for (auto v : e) {
                if (v <= static_cast<Vertex>(p.n)) {
                    hit[v] = 1;
                }
            }
        }
        for (Vertex v = 1; v <= static_cast<Vertex>(p.n); ++v) {
            if (!hit[v]) {
                covers.passed = false;
                covers.detail = "class " + std::to_string(i + 1) + " misses vertex " + std::to_string(v);
                break;
            }
        }
    }
    report.checks.push_back(covers);

    PartitionCheck short_free{"no-short-semicycle", true, "", {}};
    if (exhaustive.passed) {
        for (std::size_t i = 0; i < p.classes.size(); ++i) {
            const auto cls = Hypergraph::create(lambda, p.n, p.classes[i]);
            if (auto s = find_semicycle(cls, static_cast<std::size_t>(k), opts)) {
                short_free.passed = false;
                short_free.detail = "class " + std::to_string(i + 1) + " contains a semicycle";
                short_free.witness = std::move(s);
                break;
            }
        }
    } else {
        short_free.passed = false;
        short_free.detail = "skipped: family is not a partition of the subsets";
    }
    report.checks.push_back(short_free);

    PartitionCheck count{"class-count", true, "", {}};
    const auto classes = static_cast<std::int64_t>(p.classes.size());
    bool within = false;
    std::string bound_text;
    if (is_power_of_two(p.n)) {
        std::int64_t bound = 1;
        for (int i = 0; i < k - 2; ++i) {
            bound *= floor_log2(p.n);
        }
        within = classes <= bound;
        bound_text = std::to_string(bound);
    } else {
        const long double bound = std::pow(std::log2(static_cast<long double>(p.n)), static_cast<long double>(k - 2));
        within = static_cast<long double>(classes) <= bound;
        bound_text = std::to_string(static_cast<double>(bound));
    }
    count.passed = within;
    count.detail = std::to_string(classes) + " classes, bound " + bound_text;
    report.checks.push_back(count);
    return report;
}

} // namespace khtree

#endif // KHTREE_PARTITION_HPP
