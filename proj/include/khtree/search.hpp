#ifndef KHTREE_SEARCH_HPP
#define KHTREE_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core.hpp"

namespace khtree {

struct SearchOptions {
    // Walk-state budget per search call; exceeding it throws ResourceCap.
    std::size_t max_nodes = 200'000'000;
    // Worker threads for pair and edge sweeps.
    unsigned jobs = 1;
    // Caller guarantees the host is semicycle-free, so every chain is
    // non-self-intersecting and walks may be restricted to distinct vertices.
    bool host_semicycle_free = false;
};

enum class WitnessKind { None, Chain, Semicycle, DisconnectedPair, RemovableEdge, AddableEdge };

inline const char* witness_kind_name(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::None: return "None";
        case WitnessKind::Chain: return "Chain";
        case WitnessKind::Semicycle: return "Semicycle";
        case WitnessKind::DisconnectedPair: return "DisconnectedPair";
        case WitnessKind::RemovableEdge: return "RemovableEdge";
        case WitnessKind::AddableEdge: return "AddableEdge";
    }
    return "None";
}

/// Certificate attached to a verdict. Chain and Semicycle witnesses replay
/// under is_chain_sequence / is_semicycle_sequence.
struct Witness {
    WitnessKind kind = WitnessKind::None;
    std::optional<WalkSequence> sequence;
    std::optional<std::pair<Vertex, Vertex>> pair;
    std::optional<Edge> edge;

    static Witness chain(WalkSequence s) { return {WitnessKind::Chain, std::move(s), {}, {}}; }
    static Witness semicycle(WalkSequence s) { return {WitnessKind::Semicycle, std::move(s), {}, {}}; }
    static Witness disconnected(Vertex u, Vertex v) { return {WitnessKind::DisconnectedPair, {}, std::make_pair(u, v), {}}; }
    static Witness removable(Edge e) { return {WitnessKind::RemovableEdge, {}, {}, std::move(e)}; }
    static Witness addable(Edge e) { return {WitnessKind::AddableEdge, {}, {}, std::move(e)}; }
};

inline std::string to_string(const Witness& w) {
    std::string out = witness_kind_name(w.kind);
    if (w.sequence) {
        out += " " + to_string(*w.sequence);
    }
    if (w.pair) {
        out += " " + std::to_string(w.pair->first) + " " + std::to_string(w.pair->second);
    }
    if (w.edge) {
        out += " " + to_string(*w.edge);
    }
    return out;
}

struct Verdict {
    bool holds = true;
    Witness witness;

    explicit operator bool() const noexcept { return holds; }
};

namespace detail {

using Mask = std::uint64_t;
inline constexpr int kMaxSearchOrder = 64;

constexpr Mask bit(Vertex v) { return Mask{1} << (v - 1); }

inline Mask mask_of(const Edge& e) {
    Mask m = 0;
    for (auto v : e) {
        m |= bit(v);
    }
    return m;
}

/// Bitmask view of a hypergraph for the walk searches.
class EdgeIndex {
public:
    explicit EdgeIndex(const Hypergraph& h) : k_(h.k()), n_(h.n()), incident_(static_cast<std::size_t>(h.n()) + 1) {
        if (h.n() > kMaxSearchOrder) {
            throw Error(Errc::ResourceCap, "walk searches support at most 64 vertices, got " + std::to_string(h.n()));
        }
        masks_.reserve(h.edge_count());
        for (std::uint32_t id = 0; id < h.edge_count(); ++id) {
            const auto& e = h.edges()[id];
            const Mask m = mask_of(e);
            masks_.push_back(m);
            ids_.emplace(m, id);
            for (auto v : e) {
                incident_[v].push_back(id);
                extensions_[m & ~bit(v)].push_back(v);
            }
        }
        for (auto& [key, ws] : extensions_) {
            std::sort(ws.begin(), ws.end());
        }
    }

    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return masks_.size(); }
    Mask mask(std::uint32_t id) const { return masks_[id]; }
    const std::vector<std::uint32_t>& incident(Vertex v) const { return incident_[v]; }

    std::optional<std::uint32_t> find(Mask m) const {
        auto it = ids_.find(m);
        if (it == ids_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    // Vertices w with (kernel + w) an edge; kernel is a (k-1)-set mask.
    const std::vector<Vertex>& extensions(Mask kernel) const {
        static const std::vector<Vertex> none;
        auto it = extensions_.find(kernel);
        return it == extensions_.end() ? none : it->second;
    }

private:
    int k_;
    int n_;
    std::vector<Mask> masks_;
    std::unordered_map<Mask, std::uint32_t> ids_;
    std::unordered_map<Mask, std::vector<Vertex>> extensions_;
    std::vector<std::vector<std::uint32_t>> incident_;
};

enum class Step { Descend, Skip, Stop };

/// Depth-first enumeration of tight walks: sequences whose consecutive
/// k-windows are pairwise distinct edges. The state is the ordered suffix
/// of the last k-1 vertices plus the set of used edges. With
/// distinct_vertices set, walks never revisit a vertex.
class Walker {
public:
    Walker(const EdgeIndex& index, bool distinct_vertices, std::size_t max_nodes)
        : index_(index), distinct_(distinct_vertices), max_nodes_(max_nodes), used_(index.edge_count(), 0) {}

    const WalkSequence& sequence() const noexcept { return seq_; }
    std::size_t edges_in_walk() const noexcept { return seq_.size() - static_cast<std::size_t>(index_.k()) + 1; }
    bool used(std::uint32_t id) const { return used_[id] != 0; }
    Vertex first() const { return seq_.front(); }

    Mask suffix_mask() const {
        Mask m = 0;
        const auto k = static_cast<std::size_t>(index_.k());
        for (std::size_t i = seq_.size() - (k - 1); i < seq_.size(); ++i) {
            m |= bit(seq_[i]);
        }
        return m;
    }

    /// Calls visit(*this) on every walk that starts at `start` and has at
    /// most max_edges windows. Returns false if visit requested Stop.
    template <class Visit>
    bool walk_from(Vertex start, std::size_t max_edges, Visit&& visit) {
        for (auto id : index_.incident(start)) {
            std::vector<Vertex> rest;
            for (Vertex v = 1; v <= static_cast<Vertex>(index_.n()); ++v) {
                if (v != start && (index_.mask(id) & bit(v))) {
                    rest.push_back(v);
                }
            }
            do {
                seq_.assign(1, start);
                seq_.insert(seq_.end(), rest.begin(), rest.end());
                used_[id] = 1;
                vmask_ = index_.mask(id);
                tick();
                const Step step = visit(*this);
                bool keep_going = true;
                if (step == Step::Stop) {
                    keep_going = false;
                } else if (step == Step::Descend && max_edges > 1) {
                    keep_going = extend(max_edges, visit);
                }
                used_[id] = 0;
                if (!keep_going) {
                    return false;
                }
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        seq_.clear();
        return true;
    }

private:
    void tick() {
        if (++nodes_ > max_nodes_) {
            throw Error(Errc::ResourceCap, "walk search exceeded " + std::to_string(max_nodes_) + " states");
        }
    }

    template <class Visit>
    bool extend(std::size_t max_edges, Visit& visit) {
        const Mask kernel = suffix_mask();
        for (Vertex w : index_.extensions(kernel)) {
            if (distinct_ && (vmask_ & bit(w))) {
                continue;
            }
            const auto id = *index_.find(kernel | bit(w));
            if (used_[id]) {
                continue;
            }
            const Mask saved = vmask_;
            seq_.push_back(w);
            used_[id] = 1;
            vmask_ |= bit(w);
            tick();
            const Step step = visit(*this);
            bool keep_going = true;
            if (step == Step::Stop) {
                keep_going = false;
            } else if (step == Step::Descend && edges_in_walk() < max_edges) {
                keep_going = extend(max_edges, visit);
            }
            used_[id] = 0;
            vmask_ = saved;
            seq_.pop_back();
            if (!keep_going) {
                return false;
            }
        }
        return true;
    }

    const EdgeIndex& index_;
    bool distinct_;
    std::size_t max_nodes_;
    std::size_t nodes_ = 0;
    std::vector<char> used_;
    WalkSequence seq_;
    Mask vmask_ = 0;
};

/// Evaluates fn(0..count-1) on `jobs` threads and returns the smallest index
/// whose result is engaged, along with that result. Indices above the best
/// hit found so far are skipped, so the answer is the same for any job count.
template <class T, class Fn>
std::optional<std::pair<std::size_t, T>> first_hit(std::size_t count, unsigned jobs, Fn&& fn) {
    std::vector<std::optional<T>> results(count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || i > best.load()) {
                return;
            }
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                best.store(0);
                return;
            }
            if (results[i]) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (results[i]) {
            return std::make_pair(i, std::move(*results[i]));
        }
    }
    return std::nullopt;
}

inline void check_vertex(const Hypergraph& h, Vertex v) {
    if (v < 1 || v > static_cast<Vertex>(h.n())) {
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " outside [1," + std::to_string(h.n()) + "]");
    }
}

// Chain of length 1 through a shared edge: u, remaining vertices ascending, v.
inline std::optional<WalkSequence> co_edge_chain(const Hypergraph& h, Vertex u, Vertex v) {
    for (const auto& e : h.edges()) {
        if (e.contains(u) && e.contains(v)) {
            WalkSequence s{u};
            for (auto x : e) {
                if (x != u && x != v) {
                    s.push_back(x);
                }
            }
            s.push_back(v);
            return s;
        }
    }
    return std::nullopt;
}

inline std::size_t edge_limit(std::optional<std::size_t> cap) {
    return cap ? *cap : static_cast<std::size_t>(-1);
}

} // namespace detail

/// Searches for a chain containing u and v.
///
/// Any chain through both vertices can be cut down to a contiguous run of
/// its windows that starts at u and ends at v (reversing it if v comes
/// first); when u and v lie in a common window, that window alone is a chain.
/// The cut keeps windows distinct and endpoints different, so it is enough
/// to look for walks starting at u and ending at v. This holds for
/// self-intersecting chains too.
inline std::optional<WalkSequence> find_connecting_chain(const Hypergraph& h, Vertex u, Vertex v,
                                                         std::optional<std::size_t> max_len = std::nullopt,
                                                         const SearchOptions& opts = {}) {
    detail::check_vertex(h, u);
    detail::check_vertex(h, v);
    if (u == v) {
        throw Error(Errc::InvalidArgument, "connecting chain needs two distinct vertices");
    }
    if (max_len && *max_len == 0) {
        return std::nullopt;
    }
    if (auto s = detail::co_edge_chain(h, u, v)) {
        return s;
    }
    const detail::EdgeIndex index(h);
    detail::Walker walker(index, opts.host_semicycle_free, opts.max_nodes);
    std::optional<WalkSequence> found;
    walker.walk_from(u, detail::edge_limit(max_len), [&](const detail::Walker& w) {
        if (w.sequence().back() == v) {
            found = w.sequence();
            return detail::Step::Stop;
        }
        return detail::Step::Descend;
    });
    return found;
}

/// Connectivity rule valid in hosts whose chains have at most 2 edges: u and
/// v are connected iff they share an edge, or some e containing u and some f
/// containing v meet in k-1 vertices.
inline std::optional<WalkSequence> find_connecting_chain_two_hypertree(const Hypergraph& h, Vertex u, Vertex v) {
    detail::check_vertex(h, u);
    detail::check_vertex(h, v);
    if (u == v) {
        throw Error(Errc::InvalidArgument, "connecting chain needs two distinct vertices");
    }
    if (auto s = detail::co_edge_chain(h, u, v)) {
        return s;
    }
    const auto k = static_cast<std::size_t>(h.k());
    for (const auto& e : h.edges()) {
        if (!e.contains(u)) {
            continue;
        }
        for (const auto& f : h.edges()) {
            if (f.contains(v) && e.intersection_size(f) == k - 1) {
                WalkSequence s{u};
                for (auto x : e) {
                    if (x != u) {
                        s.push_back(x);
                    }
                }
                s.push_back(v);
                return s;
            }
        }
    }
    return std::nullopt;
}

namespace detail {

// Vertices w > u that are not chain-connected to u; empty means all reached.
inline std::vector<Vertex> unreached_from(const Hypergraph& h, const EdgeIndex& index, Vertex u,
                                          const SearchOptions& opts) {
    Mask target = 0;
    for (Vertex w = u + 1; w <= static_cast<Vertex>(h.n()); ++w) {
        target |= bit(w);
    }
    Mask reached = 0;
    for (auto id : index.incident(u)) {
        reached |= index.mask(id);
    }
    if ((target & ~reached) != 0) {
        Walker walker(index, opts.host_semicycle_free, opts.max_nodes);
        walker.walk_from(u, static_cast<std::size_t>(-1), [&](const Walker& w) {
            const Vertex x = w.sequence().back();
            if (x != u) {
                reached |= bit(x);
            }
            return (target & ~reached) == 0 ? Step::Stop : Step::Descend;
        });
    }
    std::vector<Vertex> missing;
    for (Vertex w = u + 1; w <= static_cast<Vertex>(h.n()); ++w) {
        if ((target & bit(w)) && !(reached & bit(w))) {
            missing.push_back(w);
        }
    }
    return missing;
}

inline std::vector<Vertex> unreached_from_two_hypertree(const Hypergraph& h, const EdgeIndex& index, Vertex u) {
    Mask reached = 0;
    const auto k = static_cast<std::size_t>(h.k());
    for (auto id : index.incident(u)) {
        const Mask e = index.mask(id);
        reached |= e;
        for (Vertex x = 1; x <= static_cast<Vertex>(h.n()); ++x) {
            if (!(e & bit(x)) || k < 2) {
                continue;
            }
            // kernel e - x, any edge through it meets e in k-1 vertices
            for (Vertex w : index.extensions(e & ~bit(x))) {
                reached |= bit(w);
            }
        }
    }
    if (k == 1) {
        // chains of a 1-uniform host: any two distinct singleton edges
        for (Vertex w = 1; w <= static_cast<Vertex>(h.n()); ++w) {
            if (index.find(bit(w)) && index.find(bit(u))) {
                reached |= bit(w);
            }
        }
    }
    std::vector<Vertex> missing;
    for (Vertex w = u + 1; w <= static_cast<Vertex>(h.n()); ++w) {
        if (!(reached & bit(w))) {
            missing.push_back(w);
        }
    }
    return missing;
}

enum class Connectivity { General, TwoHypertree };

inline Verdict chain_connected(const Hypergraph& h, Connectivity mode, const SearchOptions& opts) {
    if (h.n() < 2) {
        return {};
    }
    const EdgeIndex index(h);
    auto hit = first_hit<std::pair<Vertex, Vertex>>(
        static_cast<std::size_t>(h.n()), opts.jobs,
        [&](std::size_t i) -> std::optional<std::pair<Vertex, Vertex>> {
            const auto u = static_cast<Vertex>(i + 1);
            const auto missing = mode == Connectivity::TwoHypertree ? unreached_from_two_hypertree(h, index, u)
                                                                    : unreached_from(h, index, u, opts);
            if (missing.empty()) {
                return std::nullopt;
            }
            return std::make_pair(u, missing.front());
        });
    if (!hit) {
        return {};
    }
    return {false, Witness::disconnected(hit->second.first, hit->second.second)};
}

} // namespace detail

/// True iff every pair of vertices lies on a common chain. On failure the
/// witness names the lexicographically first disconnected pair.
inline Verdict is_chain_connected(const Hypergraph& h, const SearchOptions& opts = {}) {
    return detail::chain_connected(h, detail::Connectivity::General, opts);
}

/// Same verdict as is_chain_connected, valid only for hosts without chains
/// of length 3 or more.
inline Verdict is_chain_connected_two_hypertree(const Hypergraph& h, const SearchOptions& opts = {}) {
    return detail::chain_connected(h, detail::Connectivity::TwoHypertree, opts);
}

/// Finds a non-self-intersecting semicycle with at most max_edges windows.
/// A hypergraph with any semicycle also has a non-self-intersecting one, so
/// an empty result with no cap certifies semicycle-freeness.
inline std::optional<WalkSequence> find_semicycle(const Hypergraph& h,
                                                  std::optional<std::size_t> max_edges = std::nullopt,
                                                  const SearchOptions& opts = {}) {
    const auto k = static_cast<std::size_t>(h.k());
    const std::size_t cap = detail::edge_limit(max_edges);
    if (cap < 3 || h.edge_count() < 3) {
        return std::nullopt;
    }
    const detail::EdgeIndex index(h);
    std::optional<WalkSequence> found;
    for (Vertex start = 1; start <= static_cast<Vertex>(h.n()) && !found; ++start) {
        detail::Walker walker(index, true, opts.max_nodes);
        // the closing window adds one edge, so open walks stop one short of the cap
        walker.walk_from(start, cap - 1, [&](const detail::Walker& w) {
            const auto& s = w.sequence();
            if (s.size() >= k + 1) {
                const auto id = index.find(w.suffix_mask() | detail::bit(start));
                if (id && !w.used(*id)) {
                    found = s;
                    found->push_back(start);
                    return detail::Step::Stop;
                }
            }
            return detail::Step::Descend;
        });
    }
    return found;
}

namespace detail {

struct ChainLength {
    std::size_t length = 0;
    WalkSequence witness;
};

// Longest chain, exploring walks of at most `limit` edges.
inline ChainLength longest_chain(const Hypergraph& h, std::size_t limit, const SearchOptions& opts) {
    const EdgeIndex index(h);
    ChainLength best;
    for (Vertex start = 1; start <= static_cast<Vertex>(h.n()); ++start) {
        Walker walker(index, opts.host_semicycle_free, opts.max_nodes);
        const bool complete = walker.walk_from(start, limit, [&](const Walker& w) {
            const auto& s = w.sequence();
            if (s.front() != s.back() && w.edges_in_walk() > best.length) {
                best.length = w.edges_in_walk();
                best.witness = s;
            }
            return best.length >= limit ? Step::Stop : Step::Descend;
        });
        if (!complete) {
            break;
        }
    }
    return best;
}

} // namespace detail

/// Number of edges of a longest chain. With a cap, the result is
/// min(true value, cap + 1), enough to decide the l-hypertree property for
/// any l up to cap.
inline std::size_t max_chain_length(const Hypergraph& h, std::optional<std::size_t> cap = std::nullopt,
                                    const SearchOptions& opts = {}) {
    if (h.empty()) {
        throw Error(Errc::InvalidArgument, "max_chain_length needs at least one edge");
    }
    const std::size_t limit = cap ? *cap + 1 : static_cast<std::size_t>(-1);
    return detail::longest_chain(h, limit, opts).length;
}

/// Chain-connected and semicycle-free.
inline Verdict is_hypertree(const Hypergraph& h, const SearchOptions& opts = {}) {
    auto connected = is_chain_connected(h, opts);
    if (!connected) {
        return connected;
    }
    if (auto s = find_semicycle(h, std::nullopt, opts)) {
        return {false, Witness::semicycle(std::move(*s))};
    }
    return {};
}

/// Hypertree whose chains have at most l edges; a too-long chain is the witness.
inline Verdict is_l_hypertree(const Hypergraph& h, std::size_t l, const SearchOptions& opts = {}) {
    auto tree = is_hypertree(h, opts);
    if (!tree) {
        return tree;
    }
    if (h.empty()) {
        return {};
    }
    auto tree_opts = opts;
    tree_opts.host_semicycle_free = true;
    auto chain = detail::longest_chain(h, l + 1, tree_opts);
    if (chain.length > l) {
        return {false, Witness::chain(std::move(chain.witness))};
    }
    return {};
}

namespace detail {

inline void require_hypertree(const Hypergraph& h, const SearchOptions& opts) {
    auto tree = is_hypertree(h, opts);
    if (!tree) {
        throw Error(Errc::NotAHypertree, "input is not a hypertree (" + to_string(tree.witness) + ")");
    }
}

} // namespace detail

/// Every edge is needed for chain-connectivity. Requires a hypertree.
/// When all chains have at most 2 edges (which survives edge deletion) the
/// per-edge check uses the two-hypertree connectivity rule.
inline Verdict is_edge_minimal(const Hypergraph& h, const SearchOptions& opts = {}) {
    detail::require_hypertree(h, opts);
    if (h.empty()) {
        return {};
    }
    auto inner = opts;
    inner.host_semicycle_free = true;
    inner.jobs = 1;
    const bool two = max_chain_length(h, 2, inner) <= 2;

    auto hit = detail::first_hit<Edge>(h.edge_count(), opts.jobs, [&](std::size_t i) -> std::optional<Edge> {
        const auto& e = h.edges()[i];
        const auto reduced = h.without_edge(i);
        // pairs inside the deleted edge are the usual casualties; try them first
        for (std::size_t a = 0; a < e.size(); ++a) {
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                const auto chain = two ? find_connecting_chain_two_hypertree(reduced, e[a], e[b])
                                       : find_connecting_chain(reduced, e[a], e[b], std::nullopt, inner);
                if (!chain) {
                    return std::nullopt;
                }
            }
        }
        const auto connected = two ? is_chain_connected_two_hypertree(reduced, inner) : is_chain_connected(reduced, inner);
        if (connected) {
            return e;
        }
        return std::nullopt;
    });
    if (hit) {
        return {false, Witness::removable(std::move(hit->second))};
    }
    return {};
}

/// Adding any missing k-set creates a semicycle. Requires a hypertree. Since
/// the host is semicycle-free, any semicycle of h + s runs through s.
inline Verdict is_edge_maximal(const Hypergraph& h, const SearchOptions& opts = {}) {
    detail::require_hypertree(h, opts);
    std::vector<Edge> missing;
    for_each_combination(1, static_cast<Vertex>(h.n()), static_cast<Vertex>(h.k()), [&](const std::vector<Vertex>& c) {
        Edge s(c);
        if (!h.contains(s)) {
            missing.push_back(std::move(s));
        }
        if (missing.size() > opts.max_nodes) {
            throw Error(Errc::ResourceCap, "too many candidate edges");
        }
        return true;
    });
    auto inner = opts;
    inner.jobs = 1;
    auto hit = detail::first_hit<Edge>(missing.size(), opts.jobs, [&](std::size_t i) -> std::optional<Edge> {
        if (find_semicycle(h.with_edge(missing[i]), std::nullopt, inner)) {
            return std::nullopt;
        }
        return missing[i];
    });
    if (hit) {
        return {false, Witness::addable(std::move(hit->second))};
    }
    return {};
}

/// Both edge-minimal and edge-maximal.
inline Verdict is_isolated(const Hypergraph& h, const SearchOptions& opts = {}) {
    auto minimal = is_edge_minimal(h, opts);
    if (!minimal) {
        return minimal;
    }
    return is_edge_maximal(h, opts);
}

enum class OracleKind { Chains, Semicycles };

inline constexpr std::size_t kDefaultOracleCap = 50'000'000;

/// Brute-force ground truth: every vertex sequence with at most max_len
/// windows, filtered by is_chain_sequence / is_semicycle_sequence. Prefixes
/// whose newest window is not a fresh edge are dropped, since no extension
/// of them can pass either predicate. Throws ResourceCap past `cap` states.
inline std::vector<WalkSequence> oracle_enumerate(const Hypergraph& h, OracleKind kind, std::size_t max_len,
                                                  std::size_t cap = kDefaultOracleCap) {
    std::vector<WalkSequence> out;
    if (h.empty() || max_len == 0) {
        return out;
    }
    const auto k = static_cast<std::size_t>(h.k());
    const std::size_t max_vertices = max_len + k - 1;
    std::size_t states = 0;
    WalkSequence seq;
    std::vector<Edge> windows;

    auto recurse = [&](auto&& self) -> void {
        if (++states > cap) {
            throw Error(Errc::ResourceCap, "oracle enumeration exceeded " + std::to_string(cap) + " states");
        }
        if (seq.size() >= k) {
            const bool ok = kind == OracleKind::Chains ? is_chain_sequence(h, seq) : is_semicycle_sequence(h, seq);
            if (ok) {
                out.push_back(seq);
            }
        }
        if (seq.size() == max_vertices) {
            return;
        }
        for (Vertex v = 1; v <= static_cast<Vertex>(h.n()); ++v) {
            seq.push_back(v);
            bool pushed = false;
            bool viable = true;
            if (seq.size() >= k) {
                Edge window(std::vector<Vertex>(seq.end() - static_cast<std::ptrdiff_t>(k), seq.end()));
                viable = window.size() == k && h.contains(window) &&
                         std::find(windows.begin(), windows.end(), window) == windows.end();
                if (viable) {
                    windows.push_back(std::move(window));
                    pushed = true;
                }
            }
            if (viable) {
                self(self);
            }
            if (pushed) {
                windows.pop_back();
            }
            seq.pop_back();
        }
    };
    recurse(recurse);
    return out;
}

} // namespace khtree

#endif // KHTREE_SEARCH_HPP
