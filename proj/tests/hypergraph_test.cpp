#include "rank3/hypergraph.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "support.hpp"

namespace rank3 {
namespace {

using testing::edges_of;
using testing::id;
using testing::Labels;
using testing::raw;

TEST(Edge, RejectsRankFour) {
  EXPECT_THROW((Edge{0, 1, 2, 3}), RankError);
  EXPECT_THROW((Edge{1, 1}), MalformedInput);
}

TEST(Edge, SortsVertices) {
  const Edge e{5, 2, 7};
  EXPECT_EQ(e[0], 2u);
  EXPECT_EQ(e[2], 7u);
  EXPECT_EQ(e.without(5), (Edge{2, 7}));
}

TEST(Build, RejectsOutOfRangeAndDuplicateLabels) {
  EXPECT_THROW(Hypergraph::build(2, {Edge{0, 2}}), MalformedInput);
  EXPECT_THROW(Hypergraph::build(2, {}, {"a", "a"}), MalformedInput);
}

TEST(Normalize, RemovesSupersets) {
  EXPECT_EQ(edges_of(normalize(raw("abc", {"ab", "abc"}))), (Labels{{"a", "b"}}));
}

TEST(Normalize, MergesDuplicates) {
  EXPECT_EQ(edges_of(normalize(raw("abc", {"abc", "abc"}))), (Labels{{"a", "b", "c"}}));
}

TEST(Normalize, EmptyEdgeSwallowsEverything) {
  const Hypergraph h = normalize(raw("abc", {"", "a", "bc"}));
  EXPECT_EQ(edges_of(h), (Labels{{}}));
  EXPECT_TRUE(h.has_empty_edge());
  EXPECT_EQ(h.vertex_count(), 3u);
}

TEST(MakerMove, WithdrawsVertex) {
  const Game g = maker_move(make_game(3, {Edge{0, 1, 2}}, Player::Maker, {"a", "b", "c"}), 0);
  EXPECT_EQ(edges_of(g.graph), (Labels{{"b", "c"}}));
  EXPECT_EQ(g.to_move, Player::Breaker);
}

TEST(MakerMove, WithdrawsFromEveryEdge) {
  const Game g0 = testing::game("player M\nedge a b\nedge a c d\n");
  EXPECT_EQ(edges_of(maker_move(g0, id(g0.graph, "a")).graph), (Labels{{"b"}, {"c", "d"}}));
}

TEST(MakerMove, VShapeCollapse) {
  const Game g0 = testing::game("player M\nedge a b\nedge b c\n");
  EXPECT_EQ(edges_of(maker_move(g0, id(g0.graph, "b")).graph), (Labels{{"a"}, {"c"}}));
}

TEST(MakerMove, Errors) {
  const Game g0 = testing::game("player M\nedge a b\n");
  EXPECT_THROW(maker_move(g0, 2), IllegalMove);
  const Game g1 = testing::game("player B\nedge a b\n");
  EXPECT_THROW(maker_move(g1, 0), WrongPlayer);
}

TEST(BreakerMove, DeletesEdges) {
  const Game g0 = testing::game("player B\nedge a b\nedge b c\n");
  EXPECT_EQ(edges_of(breaker_move(g0, id(g0.graph, "b")).graph), Labels{});
  const Game g1 = testing::game("player B\nedge a b\nedge c d\n");
  const Game after = breaker_move(g1, id(g1.graph, "a"));
  EXPECT_EQ(edges_of(after.graph), (Labels{{"c", "d"}}));
  EXPECT_EQ(after.to_move, Player::Maker);
}

TEST(BreakerMove, EmptyEdgeSurvives) {
  const Game g{normalize(raw("ab", {"", "a"})), Player::Breaker};
  const Game after = breaker_move(g, 0);
  EXPECT_TRUE(after.graph.has_empty_edge());
  EXPECT_EQ(after.graph.vertex_count(), 1u);
}

TEST(BreakerMove, Errors) {
  const Game g0 = testing::game("player B\nedge a b\n");
  EXPECT_THROW(breaker_move(g0, 7), IllegalMove);
  const Game g1 = testing::game("player M\nedge a b\n");
  EXPECT_THROW(breaker_move(g1, 0), WrongPlayer);
}

TEST(BreakerMove, StrandedVerticesStayLegal) {
  const Game g0 = testing::game("player B\nedge a b c\nedge c d\n");
  const Game g1 = breaker_move(g0, id(g0.graph, "c"));
  EXPECT_EQ(g1.graph.edge_count(), 0u);
  EXPECT_EQ(testing::vertex_labels(g1.graph), (std::vector<std::string>{"a", "b", "d"}));
  EXPECT_NO_THROW(maker_move(g1, 0));
}

TEST(Restrict, DefinitionClauseByClause) {
  const Hypergraph h = raw("abcd", {"abc", "bd", "c"});
  const Vertex x[] = {0}, y[] = {3};
  const Hypergraph r = restrict(h, x, y);
  EXPECT_EQ(edges_of(r), (Labels{{"b", "c"}, {"c"}}));
  EXPECT_EQ(testing::vertex_labels(r), (std::vector<std::string>{"b", "c"}));
}

TEST(Restrict, EmptySetsAreIdentity) {
  const Hypergraph h = raw("abcd", {"abc", "bd", "c"});
  EXPECT_EQ(restrict(h, {}, {}), h);
}

TEST(Restrict, FullWithdrawalLeavesEmptyEdge) {
  const Vertex x[] = {0, 1};
  const Hypergraph r = restrict(raw("ab", {"ab"}), x, {});
  EXPECT_EQ(edges_of(r), (Labels{{}}));
  EXPECT_EQ(r.vertex_count(), 0u);
}

TEST(Restrict, Errors) {
  const Hypergraph h = raw("abc", {"abc"});
  const Vertex both[] = {1};
  const Vertex bad[] = {5};
  EXPECT_THROW(restrict(h, both, both), InvalidRestriction);
  EXPECT_THROW(restrict(h, bad, {}), InvalidRestriction);
}

TEST(Restrict, MovesAreRestrictPlusNormalize) {
  for (const Game& g : testing::random_games(200, 3, 8, 41)) {
    for (Vertex v = 0; v < g.graph.vertex_count(); ++v) {
      const Vertex one[] = {v};
      const Game next = play(g, v);
      const Hypergraph expected = g.to_move == Player::Maker ? normalize(restrict(g.graph, one, {}))
                                                             : normalize(restrict(g.graph, {}, one));
      ASSERT_EQ(next.graph, expected);
    }
  }
}

TEST(Origins, SurviveMoves) {
  const Game g0 = testing::game("player M\nedge a b c\nedge c d e\n");
  const Game g1 = play(play(g0, id(g0.graph, "c")), 0);  // Breaker deletes a
  EXPECT_EQ(testing::vertex_labels(g1.graph), (std::vector<std::string>{"b", "d", "e"}));
  EXPECT_EQ(g1.graph.origin(0), id(g0.graph, "b"));
}

TEST(VirtualEdges, TwoGenerators) {
  const Hypergraph h = normalize(raw("abcd", {"abc", "abd"}));
  const auto ves = virtual_edges(h);
  ASSERT_EQ(ves.size(), 1u);
  EXPECT_EQ(ves[0].pair, (std::array<Vertex, 2>{0, 1}));
  EXPECT_EQ(ves[0].generators, (std::vector<Vertex>{2, 3}));
}

TEST(VirtualEdges, CollectsAllGenerators) {
  const auto ves = virtual_edges(normalize(raw("abcde", {"abc", "abd", "abe"})));
  ASSERT_EQ(ves.size(), 1u);
  EXPECT_EQ(ves[0].generators, (std::vector<Vertex>{2, 3, 4}));
}

TEST(VirtualEdges, NoneWithoutOverlap) {
  EXPECT_TRUE(virtual_edges(normalize(raw("abcdef", {"abc", "def"}))).empty());
}

TEST(ClassifyRegular, OverlappingPairAndLoneEdge) {
  const Hypergraph h = normalize(raw("abcdefg", {"abc", "abd", "efg"}));
  const RegularSets r = classify_regular(h);
  EXPECT_EQ(r.edges, (std::vector<Edge>{Edge{4, 5, 6}}));
  EXPECT_EQ(r.vertices, (std::vector<Vertex>{2, 3, 4, 5, 6}));
}

TEST(ClassifyRegular, SharingOneVertexWithTwoEdgeIsRegular) {
  const Hypergraph h = normalize(raw("abcd", {"ab", "acd"}));
  const RegularSets r = classify_regular(h);
  EXPECT_EQ(r.edges, (std::vector<Edge>{Edge{0, 2, 3}}));
  EXPECT_EQ(r.vertices, (std::vector<Vertex>{2, 3}));
}

TEST(ClassifyRegular, Empty) {
  const RegularSets r = classify_regular(Hypergraph{});
  EXPECT_TRUE(r.edges.empty());
  EXPECT_TRUE(r.vertices.empty());
}

// Random non-normalized hypergraphs, including subset pairs and the empty edge.
std::vector<Hypergraph> random_raw(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % 7;
    const std::size_t m = rng() % 12;
    std::vector<Edge> es;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = rng() % 25 == 0 ? 0 : 1 + rng() % std::min<std::size_t>(3, n);
      std::vector<Vertex> vs(n);
      std::iota(vs.begin(), vs.end(), 0);
      std::shuffle(vs.begin(), vs.end(), rng);
      vs.resize(k);
      es.emplace_back(std::span<const Vertex>(vs));
    }
    out.push_back(Hypergraph::build(n, std::move(es)));
  }
  return out;
}

TEST(Properties, NormalizeIsIdempotentAndAntichain) {
  for (const Hypergraph& h : random_raw(2000, 3)) {
    const Hypergraph once = normalize(h);
    ASSERT_TRUE(once.is_antichain());
    ASSERT_EQ(normalize(once), once);
    if (once.has_empty_edge()) {
      ASSERT_EQ(once.edge_count(), 1u);
    }
  }
}

TEST(Properties, MovesNeverAddEdges) {
  for (const Game& g : testing::random_games(300, 2, 9, 5)) {
    for (Vertex v = 0; v < g.graph.vertex_count(); ++v) {
      ASSERT_LE(play(g, v).graph.edge_count(), g.graph.edge_count());
    }
  }
}

std::set<std::pair<Labels, std::vector<std::string>>> virtual_labels(const Hypergraph& h) {
  std::set<std::pair<Labels, std::vector<std::string>>> out;
  for (const VirtualEdge& ve : virtual_edges(h)) {
    std::vector<std::string> gs;
    for (Vertex g : ve.generators) gs.push_back(h.label(g));
    std::sort(gs.begin(), gs.end());
    std::vector<std::string> pair{h.label(ve.pair[0]), h.label(ve.pair[1])};
    std::sort(pair.begin(), pair.end());
    out.insert({Labels{pair}, gs});
  }
  return out;
}

std::set<std::string> regular_vertex_labels(const Hypergraph& h) {
  std::set<std::string> out;
  for (Vertex v : classify_regular(h).vertices) out.insert(h.label(v));
  return out;
}

TEST(Properties, RelabelingCommutes) {
  std::mt19937_64 rng(17);
  for (const Game& g : testing::random_games(300, 2, 9, 7)) {
    const std::size_t n = g.graph.vertex_count();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Game pg{relabel(g.graph, perm), g.to_move};
    ASSERT_EQ(edges_of(pg.graph), edges_of(g.graph));
    ASSERT_EQ(edges_of(normalize(pg.graph)), edges_of(normalize(g.graph)));
    ASSERT_EQ(virtual_labels(pg.graph), virtual_labels(g.graph));
    ASSERT_EQ(regular_vertex_labels(pg.graph), regular_vertex_labels(g.graph));
    ASSERT_EQ(classify_regular(pg.graph).edges.size(), classify_regular(g.graph).edges.size());
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_EQ(edges_of(play(pg, perm[v]).graph), edges_of(play(g, v).graph));
    }
  }
}

TEST(Properties, VirtualPairsAreNotProperEdges) {
  for (const Game& g : testing::random_games(1000, 3, 9, 11)) {
    for (const VirtualEdge& ve : virtual_edges(g.graph)) {
      ASSERT_FALSE(g.graph.has_edge(Edge{ve.pair[0], ve.pair[1]}));
      ASSERT_GE(ve.generators.size(), 2u);
      for (Vertex gen : ve.generators) {
        ASSERT_TRUE(g.graph.has_edge(Edge{ve.pair[0], ve.pair[1], gen}));
        ASSERT_NE(gen, ve.pair[0]);
        ASSERT_NE(gen, ve.pair[1]);
      }
    }
  }
}

TEST(Properties, RestrictComposes) {
  std::mt19937_64 rng(23);
  for (const Hypergraph& h : random_raw(1000, 29)) {
    const std::size_t n = h.vertex_count();
    std::vector<int> role(n);
    for (auto& r : role) r = static_cast<int>(rng() % 5);  // 0 stays, 1..4 = X1, Y1, X2, Y2
    std::vector<Vertex> x1, y1, x2, y2, x, y;
    for (Vertex v = 0; v < n; ++v) {
      if (role[v] == 1) x1.push_back(v);
      if (role[v] == 2) y1.push_back(v);
      if (role[v] == 1 || role[v] == 3) x.push_back(v);
      if (role[v] == 2 || role[v] == 4) y.push_back(v);
    }
    const Hypergraph first = restrict(h, x1, y1);
    for (Vertex v = 0; v < first.vertex_count(); ++v) {
      const Vertex o = first.origin(v);
      if (role[o] == 3) x2.push_back(v);
      if (role[o] == 4) y2.push_back(v);
    }
    ASSERT_EQ(restrict(first, x2, y2), restrict(h, x, y));
  }
}

}  // namespace
}  // namespace rank3
