// Acceptance run: one PASS/FAIL line per criterion. Time limits and
// tolerances are fixed here; exact quantities use exact arithmetic.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "khtree/khtree.hpp"

using namespace khtree;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> body;
};

// sum over j of sum over i in [2^j, 2^(j+1)) of (i - 2^j)(2^m - 1 - i)
std::int64_t doubling_double_sum(int m) {
    std::int64_t total = 0;
    const std::int64_t n = (std::int64_t{1} << m) - 1;
    for (int j = 1; j < m; ++j) {
        const std::int64_t lo = std::int64_t{1} << j;
        for (std::int64_t i = lo; i < 2 * lo; ++i) {
            total += (i - lo) * (n - i);
        }
    }
    return total;
}

Outcome partition_validity() {
    Outcome o;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 4}, {3, 8}, {3, 16}, {4, 8}, {4, 16}}) {
        const auto p = build_partition(n, k);
        const auto r = verify_partition(p, k);
        const auto tag = "(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
        o.require(r.checks.size() == 5 && r.passed(), "verify_partition failed " + tag);
        o.require(static_cast<double>(p.classes.size()) <= std::pow(std::log2(n), k - 2) + 1e-9,
                  "class count above (log2 n)^(k-2) " + tag);
    }
    o.require(partition_class_count(4, 2) == 2, "F(4,2) != 2");
    o.require(partition_class_count(8, 2) == 3, "F(8,2) != 3");
    o.require(build_partition(4, 3).classes.size() == 2 && build_partition(8, 3).classes.size() == 3,
              "built class counts differ from F");
    return o;
}

Outcome labelled_partition() {
    Outcome o;
    const auto h = labelled_partition_hypertree(8, 3);
    o.require(h.n() == 11, "n != 11");
    o.require(h.edge_count() == 29, "m != 29");
    o.require(is_hypertree(h).holds, "not a hypertree");
    o.require(max_chain_length(h, 3) <= 3, "a chain has more than 3 edges");
    return o;
}

Outcome star_equation() {
    Outcome o;
    const std::vector<std::pair<std::string, Hypergraph>> hosts{
        {"grid(m=2,k=3)", edge_minimal_grid(2, 3)},
        {"grid(m=4,k=3)", edge_minimal_grid(4, 3)},
        {"matching(4)", edge_maximal_matching_tree(4)},
        {"matching(6)", edge_maximal_matching_tree(6)},
        {"matching(8)", edge_maximal_matching_tree(8)},
        {"four-uniform(3)", four_uniform_from_doubling(3)},
        {"STS(7)", steiner_s23(7).blocks},
        {"STS(9)", steiner_s23(9).blocks},
    };
    std::vector<StarDecomposition> decompositions;
    for (const auto& [name, h] : hosts) {
        const auto ledger = check_star_equation(h);
        o.require(ledger.holds(), "star equation fails on " + name);
        decompositions.push_back(ledger.decomposition);
    }
    // sub-2-hypertrees: unions of 1 to 3 maximal stars of one host
    std::mt19937_64 rng(8128);
    int done = 0;
    while (done < 50) {
        const auto& d = decompositions[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(decompositions.size()) - 1))];
        const auto want = static_cast<std::size_t>(draw(rng, 1, 3));
        if (d.stars.size() < want) {
            continue;
        }
        std::set<std::size_t> picked;
        while (picked.size() < want) {
            picked.insert(static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(d.stars.size()) - 1)));
        }
        std::vector<Edge> edges;
        for (auto i : picked) {
            edges.insert(edges.end(), d.stars[i].edges.begin(), d.stars[i].edges.end());
        }
        const auto sub = Hypergraph::create(d.k, d.n, std::move(edges));
        const auto ledger = check_star_equation(sub, StarPrecondition::ShortChainsNoSemicycle);
        o.require(ledger.holds(), "star equation fails on a star union:\n" + serialize(sub));
        o.require(ledger.star_count == static_cast<std::int64_t>(want), "star union has the wrong star count");
        ++done;
    }
    return o;
}

Outcome grid() {
    Outcome o;
    const auto h = edge_minimal_grid(4, 3);
    o.require(h.n() == 16, "n != 16");
    o.require(h.edge_count() == 48 && binomial(4, 2) * 16 / 2 == 48, "m != 48");
    o.require(is_hypertree(h).holds, "not a hypertree");
    o.require(max_chain_length(h, 2) <= 2, "chain longer than 2");
    o.require(is_edge_minimal(h).holds, "not edge-minimal");
    const Rational m(48);
    const auto refined = evaluate_bound("two_hypertree_refined", 16, 3);
    const auto plain = evaluate_bound("l_hypertree_upper", 16, 3, 2);
    const auto conj = evaluate_bound("conjecture_edge_minimal", 16, 3);
    o.require(refined == Rational(58) && plain == Rational(60) && conj == Rational(60), "bound values differ");
    o.require(m <= refined && refined <= plain && plain <= conj, "48 <= 58 <= 60 <= 60 fails");
    return o;
}

Outcome doubling() {
    Outcome o;
    const auto s7 = doubling_sts(3);
    const auto s15 = doubling_sts(4);
    o.require(verify_design(s7.blocks, 2, 1) && s7.blocks.edge_count() == 7, "STS(7) wrong");
    o.require(verify_design(s15.blocks, 2, 1) && s15.blocks.edge_count() == 35, "STS(15) wrong");
    Rational previous(0);
    for (int m : {3, 4}) {
        const auto h = four_uniform_from_doubling(m);
        const auto expected = doubling_double_sum(m);
        o.require(static_cast<std::int64_t>(h.edge_count()) == expected, "edge count != double sum for m=" + std::to_string(m));
        o.require(expected == (m == 3 ? 8 : 120), "double sum value for m=" + std::to_string(m));
        o.require(is_hypertree(h).holds, "not a hypertree for m=" + std::to_string(m));
        o.require(max_chain_length(h, 2) <= 2, "chain longer than 2 for m=" + std::to_string(m));
        const Rational ratio(static_cast<std::int64_t>(h.edge_count()), binomial(h.n(), 3));
        o.require(ratio > previous && ratio < Rational(2, 7), "ratio not increasing below 2/7");
        previous = ratio;
    }
    o.require(previous == Rational(120, 455), "ratio at m=4 != 120/455");
    return o;
}

Outcome matching_trees() {
    Outcome o;
    for (int n : {4, 6, 8}) {
        const auto h = edge_maximal_matching_tree(n);
        const auto tag = " at n=" + std::to_string(n);
        o.require(static_cast<std::int64_t>(h.edge_count()) == n * (n - 2) / 4, "edge count" + tag);
        o.require(is_hypertree(h).holds, "not a hypertree" + tag);
        o.require(is_edge_maximal(h).holds, "not edge-maximal" + tag);
        o.require(Rational(static_cast<std::int64_t>(h.edge_count())) >= evaluate_bound("edge_maximal_lower", n, 3),
                  "below the edge-maximal lower bound" + tag);
    }
    o.require(evaluate_bound("edge_maximal_lower", 8, 3) == Rational(4), "lower bound at n=8 != 4");
    return o;
}

Outcome tight_path_tightness() {
    Outcome o;
    const auto h = tight_path(9, 3);
    o.require(h.edge_count() == 7, "m != 7");
    o.require(Rational(7) == evaluate_bound("chain_lower", 9, 3), "chain bound != 7");
    o.require(is_hypertree(h).holds, "not a hypertree");
    o.require(is_edge_minimal(h).holds, "not edge-minimal");
    return o;
}

Outcome gluing() {
    Outcome o;
    const auto edge = new_hypergraph(3, 3, {{1, 2, 3}});
    for (auto [n, m] : std::vector<std::pair<int, std::size_t>>{{7, 7}, {9, 12}}) {
        const auto h = glue(edge, steiner_s23(n));
        const auto tag = " for S(2,3," + std::to_string(n) + ")";
        o.require(h.edge_count() == m, "edge count" + tag);
        o.require(is_hypertree(h).holds && is_edge_minimal(h).holds, "not an edge-minimal hypertree" + tag);
        o.require(edge_ratio(h) == Rational(1, 3) && edge_ratio(edge) == Rational(1, 3), "edge ratio" + tag);
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    std::size_t pairs = 0;
    const int instances = 250;
    for (int i = 0; i < instances; ++i) {
        const auto h = random_hypergraph(rng, 3, 7, 10);
        const auto c = compare_with_oracle(h);
        pairs += c.pairs;
        o.require(c.mismatches.empty(), "mismatch on instance " + std::to_string(i) + ":\n" + serialize(h));
    }
    if (o.ok) {
        o.detail = std::to_string(instances) + " instances, " + std::to_string(pairs) + " pairs";
    }
    return o;
}

Outcome steiner_hypertrees() {
    Outcome o;
    for (int n : {7, 9}) {
        const auto h = steiner_s23(n).blocks;
        o.require(is_hypertree(h).holds, "STS(" + std::to_string(n) + ") not a hypertree");
        o.require(max_chain_length(h) == 1, "max chain != 1");
        o.require(static_cast<std::int64_t>(h.edge_count()) * 3 == binomial(n, 2), "edge count != C(n,2)/3");
    }
    return o;
}

Outcome baranyai() {
    Outcome o;
    const auto f = baranyai_factorization(6, 3);
    o.require(f.factors.size() == 10, "factor count != 10");
    std::set<Edge> all;
    for (const auto& factor : f.factors) {
        o.require(factor.size() == 2, "factor without 2 triples");
        std::set<Vertex> covered;
        for (const auto& b : factor) {
            covered.insert(b.begin(), b.end());
            all.insert(b);
        }
        o.require(covered.size() == 6, "factor does not partition [6]");
    }
    o.require(all.size() == 20, "union is not all 20 triples");
    for (int m : {4, 6, 8}) {
        const auto b = baranyai_factorization(m, 2);
        const auto r = round_robin_one_factorization(m);
        o.require(check_factorization(b).empty() && check_factorization(r).empty(), "invalid factorization at m=" + std::to_string(m));
        o.require(b.factors.size() == r.factors.size(), "factor counts differ at m=" + std::to_string(m));
        std::set<Edge> eb;
        std::set<Edge> er;
        for (const auto& x : b.factors) {
            eb.insert(x.begin(), x.end());
        }
        for (const auto& x : r.factors) {
            er.insert(x.begin(), x.end());
        }
        o.require(eb == er, "block sets differ at m=" + std::to_string(m));
    }
    return o;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "partition validity", 10, partition_validity},
        {2, "labelled partition hypertree (8,3)", 30, labelled_partition},
        {3, "star equation", 60, star_equation},
        {4, "edge-minimal grid (m=4,k=3)", 300, grid},
        {5, "doubling STS and 4-uniform extensions", 60, doubling},
        {6, "edge-maximal matching trees", 60, matching_trees},
        {7, "tight path tightness", 30, tight_path_tightness},
        {8, "gluing", 30, gluing},
        {9, "oracle equivalence", 300, oracle_equivalence},
        {10, "Steiner triple systems as hypertrees", 30, steiner_hypertrees},
        {11, "Baranyai factorization", 30, baranyai},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.limit_seconds) {
            o.ok = false;
            o.detail = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << timing << "]"
                  << (o.detail.empty() ? "" : " - " + o.detail) << '\n';
        failures += o.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
