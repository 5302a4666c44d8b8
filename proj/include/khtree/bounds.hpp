#ifndef KHTREE_BOUNDS_HPP
#define KHTREE_BOUNDS_HPP

#include <algorithm>
#include <array>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "search.hpp"

namespace khtree {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

enum class BoundSense { AtMost, AtLeast };

struct BoundInfo {
    std::string_view name;
    BoundSense sense;
    bool needs_l;
    bool conjecture;
};

inline constexpr std::array<BoundInfo, 9> kBounds{{
    {"chain_lower", BoundSense::AtLeast, false, false},
    {"semicycle_upper", BoundSense::AtMost, false, false},
    {"l_hypertree_upper", BoundSense::AtMost, true, false},
    {"two_hypertree_refined", BoundSense::AtMost, false, false},
    {"edge_minimal_upper", BoundSense::AtMost, false, false},
    {"edge_minimal_l_upper", BoundSense::AtMost, true, false},
    {"edge_maximal_lower", BoundSense::AtLeast, false, false},
    {"conjecture_edge_minimal", BoundSense::AtMost, false, true},
    {"conjecture_edge_maximal", BoundSense::AtLeast, false, true},
}};

inline const BoundInfo& bound_info(std::string_view name) {
    for (const auto& b : kBounds) {
        if (b.name == name) {
            return b;
        }
    }
    throw Error(Errc::UnknownBound, "no bound named '" + std::string(name) + "'");
}

/// Exact value of a named bound formula.
inline Rational evaluate_bound(std::string_view name, std::int64_t n, std::int64_t k,
                               std::optional<std::int64_t> l = std::nullopt) {
    const auto& info = bound_info(name);
    if (k < 2 || n < k) {
        throw Error(Errc::InvalidArgument, "bounds need 2 <= k <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
    if (info.needs_l && !l) {
        throw Error(Errc::InvalidArgument, std::string(name) + " needs l");
    }
    if (name == "chain_lower") {
        return Rational(n - (k - 1));
    }
    if (name == "semicycle_upper") {
        return Rational(binomial(n, k - 1));
    }
    if (name == "l_hypertree_upper") {
        if (*l < 1 || *l > k) {
            throw Error(Errc::InvalidArgument, "l_hypertree_upper needs 1 <= l <= k");
        }
        return Rational(binomial(n, k - 1), k - *l + 1);
    }
    if (name == "two_hypertree_refined") {
        return Rational(binomial(n, k - 1), k - 1) - Rational(binomial(n, k - 2), (k - 1) * (k - 1) * (k - 1));
    }
    if (name == "edge_minimal_upper") {
        return Rational(n * (n - 1) * (n - k + 1), 2);
    }
    if (name == "edge_minimal_l_upper") {
        if (*l < 1) {
            throw Error(Errc::InvalidArgument, "edge_minimal_l_upper needs l >= 1");
        }
        return Rational(*l * n * (n - 1), 2);
    }
    if (name == "edge_maximal_lower") {
        return Rational(1, k * (k - 1)) * Rational(n - k + 1, n - k + 2) * Rational(binomial(n, k - 1));
    }
    if (name == "conjecture_edge_minimal") {
        return Rational(binomial(n, 2), k - 1);
    }
    // conjecture_edge_maximal, with the O(n) slack taken as n
    return Rational(binomial(n, 2), 2) - Rational(n);
}

inline Rational edge_ratio(const Hypergraph& h) {
    if (h.n() < 2) {
        throw Error(Errc::InvalidArgument, "edge ratio needs n >= 2");
    }
    return Rational(static_cast<std::int64_t>(h.edge_count()), binomial(h.n(), 2));
}

/// Structural facts the bound hypotheses refer to. Unknown facts stay empty
/// and make the dependent rows not applicable.
struct AuditFlags {
    std::optional<bool> chain_connected;
    std::optional<bool> semicycle_free;
    std::optional<std::size_t> max_chain_len;
    std::optional<bool> edge_minimal;
    std::optional<bool> edge_maximal;
    bool verified = false;  // computed here rather than supplied

    bool hypertree() const { return chain_connected.value_or(false) && semicycle_free.value_or(false); }
};

inline AuditFlags compute_flags(const Hypergraph& h, const SearchOptions& opts = {}) {
    AuditFlags f;
    f.verified = true;
    f.chain_connected = static_cast<bool>(is_chain_connected(h, opts));
    f.semicycle_free = !find_semicycle(h, std::nullopt, opts).has_value();
    if (!h.empty()) {
        auto inner = opts;
        inner.host_semicycle_free = *f.semicycle_free;
        // without semicycles every chain is a tight path, so the search is finite
        f.max_chain_len = *f.semicycle_free ? max_chain_length(h, std::nullopt, inner)
                                            : max_chain_length(h, h.edge_count(), inner);
    }
    if (f.hypertree()) {
        f.edge_minimal = static_cast<bool>(is_edge_minimal(h, opts));
        f.edge_maximal = static_cast<bool>(is_edge_maximal(h, opts));
    }
    return f;
}

enum class BoundStatus { Satisfied, Violated, NotApplicable };

inline const char* bound_status_name(BoundStatus s) {
    switch (s) {
    case BoundStatus::Satisfied:
        return "SAT";
    case BoundStatus::Violated:
        return "VIOLATED";
    case BoundStatus::NotApplicable:
        return "NA";
    }
    return "?";
}

struct BoundRow {
    std::string name;
    std::string hypothesis;
    BoundSense sense = BoundSense::AtMost;
    std::optional<Rational> value;
    BoundStatus status = BoundStatus::NotApplicable;
    bool informational = false;
};

struct BoundsReport {
    std::string id;
    int n = 0;
    int k = 0;
    std::int64_t m = 0;
    bool flags_verified = false;
    std::vector<BoundRow> rows;

    // conjecture rows never count
    bool all_satisfied() const {
        return std::none_of(rows.begin(), rows.end(), [](const BoundRow& r) {
            return !r.informational && r.status == BoundStatus::Violated;
        });
    }

    const BoundRow* row(std::string_view name) const {
        for (const auto& r : rows) {
            if (r.name == name) {
                return &r;
            }
        }
        return nullptr;
    }
};

/// Applies every bound whose hypothesis the flags establish.
inline BoundsReport audit(const Hypergraph& h, const AuditFlags& flags, std::string id = {}) {
    BoundsReport report;
    report.id = std::move(id);
    report.n = h.n();
    report.k = h.k();
    report.m = static_cast<std::int64_t>(h.edge_count());
    report.flags_verified = flags.verified;
    const std::int64_t n = h.n();
    const std::int64_t k = h.k();
    const bool sized = k >= 2 && n >= k;
    const bool tree = flags.hypertree();
    const auto l = flags.max_chain_len ? std::optional<std::int64_t>(static_cast<std::int64_t>(*flags.max_chain_len))
                                       : std::nullopt;

    auto add = [&](std::string_view name, std::string hypothesis, bool applies, std::optional<std::int64_t> lv = {}) {
        const auto& info = bound_info(name);
        BoundRow row;
        row.name = std::string(name);
        row.hypothesis = std::move(hypothesis);
        row.sense = info.sense;
        row.informational = info.conjecture;
        if (applies && sized) {
            row.value = evaluate_bound(name, n, k, lv);
            const Rational m(report.m);
            const bool ok = info.sense == BoundSense::AtMost ? m <= *row.value : m >= *row.value;
            row.status = ok ? BoundStatus::Satisfied : BoundStatus::Violated;
        }
        report.rows.push_back(std::move(row));
    };

    add("chain_lower", "chain-connected, n >= (k-1)^2",
        flags.chain_connected.value_or(false) && n >= (k - 1) * (k - 1));
    add("semicycle_upper", "semicycle-free", flags.semicycle_free.value_or(false));
    add("l_hypertree_upper", "l-hypertree, 1 <= l <= k", tree && l && *l >= 1 && *l <= k, l);
    add("two_hypertree_refined", "2-hypertree", tree && l && *l <= 2);
    const bool minimal = tree && flags.edge_minimal.value_or(false);
    add("edge_minimal_upper", "edge-minimal hypertree", minimal);
    add("edge_minimal_l_upper", "edge-minimal l-hypertree", minimal && l && *l >= 1, l);
    const bool maximal = tree && flags.edge_maximal.value_or(false);
    add("edge_maximal_lower", "edge-maximal hypertree", maximal);
    add("conjecture_edge_minimal", "edge-minimal hypertree (conjectured)", minimal);
    add("conjecture_edge_maximal", "3-uniform edge-maximal hypertree (conjectured, O(n) taken as n)",
        maximal && k == 3);
    return report;
}

inline std::string machine_lines(const BoundsReport& report) {
    std::ostringstream out;
    for (const auto& r : report.rows) {
        out << "BOUND " << r.name << ' ' << (r.value ? to_string(*r.value) : std::string("-")) << ' '
            << bound_status_name(r.status) << '\n';
    }
    return out.str();
}

inline std::string render(const BoundsReport& report) {
    std::ostringstream out;
    if (!report.id.empty()) {
        out << report.id << ": ";
    }
    out << "n=" << report.n << " k=" << report.k << " m=" << report.m
        << (report.flags_verified ? "" : " (flags supplied, unverified)") << '\n';
    std::size_t width = 4;
    for (const auto& r : report.rows) {
        width = std::max(width, r.name.size());
    }
    out << std::left << std::setw(static_cast<int>(width)) << "name" << "  " << std::setw(4) << "rel" << std::setw(14)
        << "bound" << std::setw(10) << "status" << "hypothesis\n";
    for (const auto& r : report.rows) {
        std::string value = "-";
        if (r.value) {
            value = r.value->denominator() == 1 ? std::to_string(r.value->numerator()) : to_string(*r.value);
        }
        std::string status = bound_status_name(r.status);
        if (r.informational) {
            status += "*";
        }
        out << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(4)
            << (r.sense == BoundSense::AtMost ? "m<=" : "m>=") << std::setw(14) << value << std::setw(10) << status
            << r.hypothesis << '\n';
    }
    out << "(* informational, not a check)\n";
    return out.str();
}

} // namespace khtree

#endif // KHTREE_BOUNDS_HPP
