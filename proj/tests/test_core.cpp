#include <gtest/gtest.h>

#include "khtree/khtree.hpp"
#include "test_support.hpp"

using namespace khtree;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no khtree::Error thrown";
    return Errc::InvalidArgument;
}

} // namespace

TEST(Hypergraph, ValidatesAndCanonicalizes) {
    EXPECT_EQ(new_hypergraph(3, 4, {{1, 2, 3}, {1, 2, 4}}).edge_count(), 2u);
    EXPECT_EQ(new_hypergraph(3, 4, {{1, 2, 3}, {3, 2, 1}}).edge_count(), 1u);
    EXPECT_EQ(code_of([] { new_hypergraph(3, 4, {{1, 2}}); }), Errc::WrongCardinality);
    EXPECT_EQ(code_of([] { new_hypergraph(3, 4, {{1, 1, 2}}); }), Errc::WrongCardinality);
    EXPECT_EQ(code_of([] { new_hypergraph(3, 4, {{1, 2, 5}}); }), Errc::VertexOutOfRange);
    EXPECT_EQ(code_of([] { new_hypergraph(3, 4, {{0, 1, 2}}); }), Errc::VertexOutOfRange);
    EXPECT_EQ(code_of([] { new_hypergraph(5, 4, {}); }), Errc::UniformityExceedsOrder);
    EXPECT_EQ(code_of([] { new_hypergraph(0, 4, {}); }), Errc::InvalidArgument);
}

TEST(Hypergraph, EdgeOrderIsLexicographic) {
    const auto h = new_hypergraph(2, 4, {{3, 4}, {1, 4}, {2, 1}});
    ASSERT_EQ(h.edge_count(), 3u);
    EXPECT_EQ(h.edges()[0], (Edge{1, 2}));
    EXPECT_EQ(h.edges()[1], (Edge{1, 4}));
    EXPECT_EQ(h.edges()[2], (Edge{3, 4}));
    EXPECT_TRUE(h.contains(Edge{4, 1}));
    EXPECT_FALSE(h.contains(Edge{2, 3}));
}

TEST(Hypergraph, WithAndWithoutEdge) {
    const auto h = new_hypergraph(3, 5, {{1, 2, 3}});
    const auto g = h.with_edge(Edge{2, 3, 4});
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.without_edge(1), h);
    EXPECT_EQ(code_of([&] { h.with_edge(Edge{1, 2}); }), Errc::WrongCardinality);
}

TEST(Edge, SetOperations) {
    const Edge a{1, 2, 3};
    const Edge b{3, 2, 5};
    EXPECT_EQ(a.intersection_size(b), 2u);
    EXPECT_EQ(b.vertices(), (std::vector<Vertex>{2, 3, 5}));
    EXPECT_TRUE((Edge{1, 3}).is_subset_of(a));
    EXPECT_FALSE((Edge{1, 5}).is_subset_of(a));
    EXPECT_EQ(a.with(7), (Edge{1, 2, 3, 7}));
    EXPECT_EQ(to_string(a), "1 2 3");
}

TEST(ChainSequence, Examples) {
    const auto single = new_hypergraph(3, 3, {{1, 2, 3}});
    EXPECT_TRUE(is_chain_sequence(single, {1, 2, 3}));
    EXPECT_FALSE(is_chain_sequence(single, {1, 2, 3, 1}));
    const auto path = new_hypergraph(3, 4, {{1, 2, 3}, {2, 3, 4}});
    EXPECT_TRUE(is_chain_sequence(path, {1, 2, 3, 4}));
    EXPECT_FALSE(is_chain_sequence(path, {1, 2}));
    EXPECT_FALSE(is_chain_sequence(path, {1, 2, 4}));
}

TEST(ChainSequence, RepeatedWindowRejected) {
    // windows {1,2,3}, {2,3,1}: same edge twice
    const auto single = new_hypergraph(3, 3, {{1, 2, 3}});
    EXPECT_FALSE(is_chain_sequence(single, {1, 2, 3, 1, 2}));
}

TEST(ChainSequence, WindowWithRepeatedVertexRejected) {
    const auto path = new_hypergraph(3, 4, {{1, 2, 3}, {2, 3, 4}});
    EXPECT_FALSE(is_chain_sequence(path, {1, 2, 2, 3}));
}

TEST(SemicycleSequence, Examples) {
    const auto k4 = test::complete(3, 4);
    EXPECT_TRUE(is_semicycle_sequence(k4, {1, 2, 3, 4, 1}));
    const auto path = new_hypergraph(3, 4, {{1, 2, 3}, {2, 3, 4}});
    EXPECT_FALSE(is_semicycle_sequence(path, {1, 2, 3, 4, 1}));
    EXPECT_FALSE(is_semicycle_sequence(path, {1, 2, 3, 4}));
}

TEST(SemicycleSequence, NeedsThreeWindows) {
    // 1,2,1 has only two windows, and they are the same edge anyway
    const auto g = new_hypergraph(2, 3, {{1, 2}, {2, 3}, {1, 3}});
    EXPECT_FALSE(is_semicycle_sequence(g, {1, 2, 1}));
    EXPECT_TRUE(is_semicycle_sequence(g, {1, 2, 3, 1}));
}

TEST(SequencePredicates, NeverBothTrue) {
    const auto k5 = test::complete(3, 5);
    for (const auto& s : oracle_enumerate(k5, OracleKind::Chains, 4)) {
        EXPECT_FALSE(is_semicycle_sequence(k5, s));
    }
    for (const auto& s : oracle_enumerate(k5, OracleKind::Semicycles, 4)) {
        EXPECT_FALSE(is_chain_sequence(k5, s));
    }
}

TEST(Io, SerializeFormat) {
    const auto h = new_hypergraph(3, 4, {{1, 2, 4}, {1, 2, 3}});
    EXPECT_EQ(serialize(h), "khg 3 4 2\n1 2 3\n1 2 4\n");
}

TEST(Io, RoundTrip) {
    for (const auto& h : {test::complete(3, 5), new_hypergraph(2, 6, {{1, 6}, {2, 5}}), new_hypergraph(4, 4, {})}) {
        EXPECT_EQ(parse(serialize(h)), h);
        EXPECT_EQ(serialize(parse(serialize(h))), serialize(h));
    }
}

TEST(Io, CommentsAndUnsortedEdges) {
    const auto h = parse("# a comment\nkhg 3 5 2\n# edges follow\n5 4 3\n3 2 1\n# end\n");
    EXPECT_EQ(serialize(h), "khg 3 5 2\n1 2 3\n3 4 5\n");
}

TEST(Io, Rejections) {
    EXPECT_EQ(code_of([] { parse("khg 3 4 1\n1 2\n"); }), Errc::WrongCardinality);
    EXPECT_EQ(code_of([] { parse("khg 3 4 1\n1 2 9\n"); }), Errc::VertexOutOfRange);
    EXPECT_EQ(code_of([] { parse("khg 3 4 1\n1 2 3"); }), Errc::MalformedInput);
    EXPECT_EQ(code_of([] { parse("khgx 3 4 1\n1 2 3\n"); }), Errc::MalformedInput);
    EXPECT_EQ(code_of([] { parse("khg 3 4 2\n1 2 3\n"); }), Errc::MalformedInput);
    EXPECT_EQ(code_of([] { parse("khg 3 4 1\n1 2 3\n2 3 4\n"); }), Errc::MalformedInput);
    EXPECT_EQ(code_of([] { parse("khg 3 4 1\n\n1 2 3\n"); }), Errc::MalformedInput);
    EXPECT_EQ(code_of([] { parse("khg 3 4 1\n1 2 x\n"); }), Errc::MalformedInput);
    EXPECT_EQ(code_of([] { parse("khg 3 2 1\n1 2 3\n"); }), Errc::VertexOutOfRange);
}

TEST(Io, EdgelessBelowUniformityIsAccepted) {
    // degenerate ordered extensions produce these
    const auto h = parse("khg 4 3 0\n");
    EXPECT_EQ(h.k(), 4);
    EXPECT_EQ(h.n(), 3);
    EXPECT_TRUE(h.empty());
}

TEST(Io, FamilyRoundTrip) {
    HypergraphFamily f{4, 2, {new_hypergraph(2, 4, {{1, 2}, {3, 4}}), new_hypergraph(2, 4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})}};
    const auto text = serialize(f);
    EXPECT_EQ(text, "khgpart 4 2 2\nkhg 2 4 2\n1 2\n3 4\nkhg 2 4 4\n1 3\n1 4\n2 3\n2 4\n");
    const auto back = parse_family(text);
    ASSERT_EQ(back.members.size(), 2u);
    EXPECT_EQ(back.members[1], f.members[1]);
    EXPECT_EQ(code_of([] { parse_family("khgpart 4 2 1\nkhg 2 5 0\n"); }), Errc::MalformedInput);
}

TEST(Combinatorics, Binomial) {
    EXPECT_EQ(binomial(16, 2), 120);
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(binomial(60, 30), 118264581564861424LL);
    EXPECT_EQ(code_of([] { binomial(200, 100); }), Errc::ResourceCap);
}

TEST(Combinatorics, CombinationsInLexOrder) {
    std::vector<std::vector<Vertex>> seen;
    for_each_combination(1, 4, 2, [&](const std::vector<Vertex>& c) {
        seen.push_back(c);
        return true;
    });
    EXPECT_EQ(seen, (std::vector<std::vector<Vertex>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
}

TEST(Combinatorics, PowersOfTwo) {
    EXPECT_TRUE(is_power_of_two(1));
    EXPECT_TRUE(is_power_of_two(16));
    EXPECT_FALSE(is_power_of_two(12));
    EXPECT_FALSE(is_power_of_two(0));
    EXPECT_EQ(floor_log2(16), 4);
}
