#ifndef KHTREE_TOOLS_CLI_HPP
#define KHTREE_TOOLS_CLI_HPP

// Command-line front end. run() takes its output streams so tests can drive
// it in-process.

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "khtree/khtree.hpp"

namespace khtree::cli {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<Vertex> parse_vertices(const std::string& text) {
    std::string spaced = text;
    for (auto& c : spaced) {
        if (c == ',') {
            c = ' ';
        }
    }
    std::istringstream in(spaced);
    std::vector<Vertex> out;
    long long v = 0;
    while (in >> v) {
        if (v < 1) {
            throw UsageError("vertex list entries must be positive: '" + text + "'");
        }
        out.push_back(static_cast<Vertex>(v));
    }
    if (!in.eof()) {
        throw UsageError("cannot read vertex list '" + text + "'");
    }
    return out;
}

template <class T>
T need(const std::optional<T>& value, const char* flag, const std::string& family) {
    if (!value) {
        throw UsageError(family + " needs " + flag);
    }
    return *value;
}

inline Hypergraph load(const std::string& path) { return parse(read_file(path)); }

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        write_file(path, text);
    }
}

struct GenerateArgs {
    std::string family;
    std::optional<int> n, k, m, steiner_order;
    std::string design, perm, base, steiner, output;
};

inline SteinerSystem steiner_from(const std::string& path, std::optional<int> order, const std::string& family) {
    if (!path.empty()) {
        const auto h = load(path);
        return as_steiner_system(h, h.k() - 1);
    }
    if (order) {
        return steiner_s23(*order);
    }
    throw UsageError(family + " needs a Steiner system (--steiner FILE or --steiner-order N)");
}

inline int generate(const GenerateArgs& a, const SearchOptions& opts, std::ostream& out) {
    const auto& f = a.family;
    Hypergraph h = Hypergraph::edgeless(1, 1);
    std::optional<std::int64_t> predicted;
    auto via_spec = [&](const ConstructionSpec& spec) {
        h = build(spec, opts);
        predicted = predicted_edge_count(spec);
    };
    if (f == "labelled-partition") {
        via_spec(construction::LabelledPartition{need(a.n, "--n", f), need(a.k, "--k", f)});
    } else if (f == "ordered-extension") {
        SteinerSystem g = a.design.empty() ? steiner_from({}, a.steiner_order, f) : steiner_from(a.design, {}, f);
        auto perm = a.perm.empty() ? identity_permutation(g.n) : parse_vertices(a.perm);
        via_spec(construction::OrderedExtension{std::move(g), std::move(perm)});
    } else if (f == "four-uniform-doubling") {
        via_spec(construction::FourUniformDoubling{need(a.m, "--m", f)});
    } else if (f == "edge-minimal-grid") {
        via_spec(construction::EdgeMinimalGrid{need(a.m, "--m", f), need(a.k, "--k", f)});
    } else if (f == "edge-maximal-matching") {
        via_spec(construction::EdgeMaximalMatching{need(a.n, "--n", f)});
    } else if (f == "glue") {
        if (a.base.empty()) {
            throw UsageError("glue needs --base FILE");
        }
        via_spec(construction::Gluing{load(a.base), steiner_from(a.steiner, a.steiner_order, f)});
    } else if (f == "sts-doubling") {
        h = doubling_sts(need(a.m, "--m", f)).blocks;
    } else if (f == "steiner-s23") {
        h = steiner_s23(need(a.n, "--n", f)).blocks;
    } else if (f == "tight-path") {
        h = tight_path(need(a.n, "--n", f), need(a.k, "--k", f));
    } else if (f == "star") {
        h = star(need(a.n, "--n", f), need(a.k, "--k", f));
    } else {
        throw UsageError("unknown family '" + f + "'");
    }
    if (predicted && *predicted != static_cast<std::int64_t>(h.edge_count())) {
        throw Error(Errc::DecompositionAnomaly, "built " + std::to_string(h.edge_count()) + " edges, closed form says " +
                                                    std::to_string(*predicted));
    }
    emit(serialize(h), a.output, out);
    if (!a.output.empty()) {
        out << "wrote " << a.output << ": k=" << h.k() << " n=" << h.n() << " m=" << h.edge_count() << '\n';
    }
    return kOk;
}

struct VerifyArgs {
    std::string input;
    bool hypertree = false, edge_minimal = false, edge_maximal = false, isolated = false;
    bool chain_connected = false, semicycle_free = false;
    std::optional<std::size_t> l_hypertree;
    std::string replay;
};

inline void report(std::ostream& out, const std::string& name, const Verdict& v, bool& ok) {
    out << "CHECK " << name << ' ' << (v.holds ? "PASS" : "FAIL") << '\n';
    if (!v.holds) {
        ok = false;
        out << "WITNESS " << to_string(v.witness) << '\n';
    }
}

// Re-checks a witness line as printed by verify ("Kind v1 v2 ...").
inline bool replay(const Hypergraph& h, const std::string& line, const SearchOptions& opts, std::ostream& out) {
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    if (kind == "WITNESS") {
        in >> kind;
    }
    std::string rest;
    std::getline(in, rest);
    const auto vs = parse_vertices(rest);
    for (auto v : vs) {
        if (v > static_cast<Vertex>(h.n())) {
            throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " is outside [n]");
        }
    }
    bool valid = false;
    std::string meaning;
    if (kind == "Chain") {
        valid = is_chain_sequence(h, vs);
        meaning = "is a chain";
    } else if (kind == "Semicycle") {
        valid = is_semicycle_sequence(h, vs);
        meaning = "is a semicycle";
    } else if (kind == "DisconnectedPair") {
        if (vs.size() != 2 || vs[0] == vs[1]) {
            throw UsageError("DisconnectedPair takes two distinct vertices");
        }
        valid = !find_connecting_chain(h, vs[0], vs[1], std::nullopt, opts);
        meaning = "no chain contains both vertices";
    } else if (kind == "RemovableEdge" || kind == "AddableEdge") {
        const Edge e(vs);
        if (e.size() != static_cast<std::size_t>(h.k())) {
            throw Error(Errc::WrongCardinality, kind + " needs " + std::to_string(h.k()) + " distinct vertices");
        }
        if (kind == "RemovableEdge") {
            const auto& edges = h.edges();
            const auto it = std::find(edges.begin(), edges.end(), e);
            valid = it != edges.end() &&
                    is_chain_connected(h.without_edge(static_cast<std::size_t>(it - edges.begin())), opts).holds;
            meaning = "the edge is present and the rest stays chain-connected";
        } else {
            valid = !h.contains(e) && !find_semicycle(h.with_edge(e), std::nullopt, opts);
            meaning = "the k-set is missing and adding it creates no semicycle";
        }
    } else {
        throw UsageError("cannot replay witness kind '" + kind + "'");
    }
    out << "REPLAY " << kind << (rest.empty() ? "" : rest) << ' ' << (valid ? "CONFIRMED" : "REJECTED") << " ("
        << meaning << ")\n";
    return valid;
}

inline int verify(const VerifyArgs& a, const SearchOptions& opts, std::ostream& out) {
    const auto h = load(a.input);
    bool ok = true;
    if (!a.replay.empty()) {
        ok = replay(h, a.replay, opts, out);
    }
    const bool any = a.hypertree || a.edge_minimal || a.edge_maximal || a.isolated || a.chain_connected ||
                     a.semicycle_free || a.l_hypertree;
    if (!any && !a.replay.empty()) {
        return ok ? kOk : kFailed;
    }
    if (a.chain_connected) {
        report(out, "chain-connected", is_chain_connected(h, opts), ok);
    }
    if (a.semicycle_free) {
        auto s = find_semicycle(h, std::nullopt, opts);
        report(out, "semicycle-free", s ? Verdict{false, Witness::semicycle(*s)} : Verdict{}, ok);
    }
    std::optional<Verdict> tree;
    auto tree_verdict = [&]() -> const Verdict& {
        if (!tree) {
            tree = is_hypertree(h, opts);
        }
        return *tree;
    };
    if (a.hypertree || !any) {
        report(out, "hypertree", tree_verdict(), ok);
    }
    if (a.l_hypertree) {
        report(out, "l-hypertree " + std::to_string(*a.l_hypertree), is_l_hypertree(h, *a.l_hypertree, opts), ok);
    }
    // minimality and maximality are only defined for hypertrees
    auto guarded = [&](const char* name, auto check) {
        if (!tree_verdict()) {
            report(out, name, tree_verdict(), ok);
        } else {
            report(out, name, check(h, opts), ok);
        }
    };
    if (a.edge_minimal) {
        guarded("edge-minimal", [](const Hypergraph& g, const SearchOptions& o) { return is_edge_minimal(g, o); });
    }
    if (a.edge_maximal) {
        guarded("edge-maximal", [](const Hypergraph& g, const SearchOptions& o) { return is_edge_maximal(g, o); });
    }
    if (a.isolated) {
        guarded("isolated", [](const Hypergraph& g, const SearchOptions& o) { return is_isolated(g, o); });
    }
    return ok ? kOk : kFailed;
}

inline int stars(const std::string& input, bool relaxed, const SearchOptions& opts, std::ostream& out) {
    const auto h = load(input);
    const auto pre = relaxed ? StarPrecondition::ShortChainsNoSemicycle : StarPrecondition::TwoHypertree;
    StarLedger ledger;
    try {
        ledger = check_star_equation(h, pre, opts);
    } catch (const Error& e) {
        if (e.code() != Errc::Not2Hypertree) {
            throw;
        }
        out << "CHECK star-equation FAIL\n" << e.what() << '\n';
        return kFailed;
    }
    for (const auto& s : ledger.decomposition.stars) {
        out << "STAR {" << to_string(s.kernel) << "} :";
        for (const auto& e : s.edges) {
            out << " {" << to_string(e) << '}';
        }
        out << '\n';
    }
    out << render(ledger);
    out << "CHECK star-equation " << (ledger.holds() ? "PASS" : "FAIL") << '\n';
    return ledger.holds() ? kOk : kFailed;
}

inline int bounds(const std::string& input, const SearchOptions& opts, std::ostream& out) {
    const auto h = load(input);
    const auto report = audit(h, compute_flags(h, opts), input);
    out << render(report) << machine_lines(report);
    if (h.n() >= 2) {
        out << "RATIO " << to_string(edge_ratio(h)) << '\n';
    }
    return report.all_satisfied() ? kOk : kFailed;
}

inline int partition(int n, int k, const std::string& output, const SearchOptions& opts, std::ostream& out) {
    const auto family = build_partition(n, k);
    const auto result = verify_partition(family, k, opts);
    if (!output.empty()) {
        write_file(output, serialize(to_hypergraph_family(family)));
    }
    out << "partition n=" << n << " lambda=" << family.lambda << " classes=" << result.class_count << '\n';
    for (const auto& c : result.checks) {
        out << "CHECK " << c.name << ' ' << (c.passed ? "PASS" : "FAIL") << (c.detail.empty() ? "" : " " + c.detail)
            << '\n';
        if (c.witness) {
            out << "WITNESS Semicycle " << to_string(*c.witness) << '\n';
        }
    }
    return result.passed() ? kOk : kFailed;
}

struct OracleArgs {
    std::string input;
    std::optional<int> random;
    std::uint64_t seed = 0;
    int k = 3;
    int max_n = 7;
    int max_edges = 10;
    std::size_t max_oracle = kDefaultOracleCap;
};

inline bool compare_one(const Hypergraph& h, const std::string& label, const OracleArgs& a, const SearchOptions& opts,
                        std::ostream& out, std::size_t& pairs) {
    const auto c = compare_with_oracle(h, opts, a.max_oracle);
    pairs += c.pairs;
    for (const auto& m : c.mismatches) {
        out << "MISMATCH " << label << ' ' << m.what << " optimized=" << m.optimized << " oracle=" << m.oracle << '\n';
    }
    return c.mismatches.empty();
}

inline int oracle_compare(const OracleArgs& a, const SearchOptions& opts, std::ostream& out) {
    std::size_t pairs = 0;
    std::size_t instances = 0;
    std::size_t bad = 0;
    if (!a.input.empty()) {
        ++instances;
        bad += compare_one(load(a.input), a.input, a, opts, out, pairs) ? 0 : 1;
    }
    if (a.random) {
        if (*a.random < 0 || a.k < 1 || a.max_n < a.k || a.max_edges < 0) {
            throw UsageError("bad random corpus parameters");
        }
        out << "seed " << a.seed << '\n';
        std::mt19937_64 rng(a.seed);
        for (int i = 0; i < *a.random; ++i) {
            const auto h = random_hypergraph(rng, a.k, a.max_n, a.max_edges);
            ++instances;
            if (!compare_one(h, "#" + std::to_string(i), a, opts, out, pairs)) {
                ++bad;
                out << serialize(h);
            }
        }
    }
    if (instances == 0) {
        throw UsageError("oracle-compare needs an input file or --random N");
    }
    out << "instances " << instances << " pairs " << pairs << " mismatching-instances " << bad << '\n';
    return bad == 0 ? kOk : kFailed;
}

} // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, verify, decompose and audit k-uniform hypertrees.", "khtree"};
    app.require_subcommand(1);
    SearchOptions opts;
    app.add_option("--max-nodes", opts.max_nodes, "walk-search state budget per search")->check(CLI::PositiveNumber);
    app.add_option("--jobs", opts.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    detail::GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "build a construction and write it as .khg");
    generate->fallthrough();
    generate->add_option("family", gen.family,
                         "labelled-partition | ordered-extension | four-uniform-doubling | edge-minimal-grid | "
                         "edge-maximal-matching | glue | sts-doubling | steiner-s23 | tight-path | star")
        ->required();
    generate->add_option("--n", gen.n);
    generate->add_option("--k", gen.k);
    generate->add_option("--m", gen.m);
    generate->add_option("--design", gen.design, "Steiner system S(k-1,k,n) file for ordered-extension");
    generate->add_option("--perm", gen.perm, "vertex order for ordered-extension, e.g. \"3,1,2\"");
    generate->add_option("--base", gen.base, "edge-minimal hypertree file for glue");
    generate->add_option("--steiner", gen.steiner, "S(2,l,n) file for glue");
    generate->add_option("--steiner-order", gen.steiner_order, "use the S(2,3,n) built for this n");
    generate->add_option("-o,--output", gen.output, "output file (default stdout)");

    detail::VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "check hypertree properties; prints witnesses");
    verify->fallthrough();
    verify->add_option("input", ver.input)->required();
    verify->add_flag("--hypertree", ver.hypertree);
    verify->add_option("--l-hypertree", ver.l_hypertree);
    verify->add_flag("--edge-minimal", ver.edge_minimal);
    verify->add_flag("--edge-maximal", ver.edge_maximal);
    verify->add_flag("--isolated", ver.isolated);
    verify->add_flag("--chain-connected", ver.chain_connected);
    verify->add_flag("--semicycle-free", ver.semicycle_free);
    verify->add_option("--replay", ver.replay, "re-check a printed witness, e.g. \"Semicycle 1 2 3 1\"");

    std::string stars_input;
    bool relaxed = false;
    auto* stars = app.add_subcommand("stars", "star decomposition and star-equation ledger");
    stars->fallthrough();
    stars->add_option("input", stars_input)->required();
    stars->add_flag("--relaxed", relaxed, "accept semicycle-free inputs with chains of at most 2 edges");

    std::string bounds_input;
    auto* bounds = app.add_subcommand("bounds", "audit the edge count against every applicable bound");
    bounds->fallthrough();
    bounds->add_option("input", bounds_input)->required();

    int pn = 0;
    int pk = 0;
    std::string part_output;
    auto* partition = app.add_subcommand("partition", "build and verify the (k-1)-subset partition of [n]");
    partition->fallthrough();
    partition->add_option("n", pn)->required();
    partition->add_option("k", pk)->required();
    partition->add_option("-o,--output", part_output, "write the family as khgpart");

    detail::OracleArgs orc;
    auto* oracle = app.add_subcommand("oracle-compare", "compare searches with brute-force enumeration");
    oracle->fallthrough();
    oracle->add_option("input", orc.input);
    oracle->add_option("--random", orc.random, "number of random instances");
    oracle->add_option("--seed", orc.seed);
    oracle->add_option("--k", orc.k);
    oracle->add_option("--max-n", orc.max_n);
    oracle->add_option("--max-edges", orc.max_edges);
    oracle->add_option("--max-oracle", orc.max_oracle, "brute-force state budget per enumeration")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*generate) {
            return detail::generate(gen, opts, out);
        }
        if (*verify) {
            return detail::verify(ver, opts, out);
        }
        if (*stars) {
            return detail::stars(stars_input, relaxed, opts, out);
        }
        if (*bounds) {
            return detail::bounds(bounds_input, opts, out);
        }
        if (*partition) {
            return detail::partition(pn, pk, part_output, opts, out);
        }
        return detail::oracle_compare(orc, opts, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::ResourceCap ? kResource : kUsage;
    }
}

} // namespace khtree::cli

#endif // KHTREE_TOOLS_CLI_HPP
