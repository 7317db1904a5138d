#include "rank3/hotpath.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <set>

#include "rank3/oracle.hpp"
#include "support.hpp"

namespace rank3 {
namespace {

using testing::id;

Hypergraph graph(std::string_view text) { return testing::game(std::string("player M\n") + std::string(text)).graph; }

TEST(ComponentMap, ChainIsOneComponent) {
  const ComponentMap cm = component_map(graph("edge a b c\nedge c d e\n"));
  EXPECT_EQ(cm.regular_edges.size(), 2u);
  EXPECT_EQ(cm.component_count, 1u);
  EXPECT_EQ(cm.edge_component[0], cm.edge_component[1]);
}

TEST(ComponentMap, DisjointEdgesAreSeparate) {
  const ComponentMap cm = component_map(graph("edge a b c\nedge d e f\n"));
  EXPECT_EQ(cm.component_count, 2u);
  EXPECT_NE(cm.edge_component[0], cm.edge_component[1]);
}

TEST(ComponentMap, OverlappingEdgesAreNotRegular) {
  const ComponentMap cm = component_map(graph("edge a b c\nedge a b d\n"));
  EXPECT_TRUE(cm.regular_edges.empty());
  EXPECT_EQ(cm.component_count, 0u);
  for (auto c : cm.vertex_component) EXPECT_EQ(c, ComponentMap::kNone);
}

TEST(TwoEdgeEnds, SupersetRemovedFirst) {
  const Hypergraph h = graph("edge a b\nedge a b c\n");
  const auto ends = two_edge_ends(h);
  ASSERT_EQ(ends.size(), 1u);
  EXPECT_EQ(ends[0].kind, EndKind::Proper);
  EXPECT_EQ(ends[0].edge(), (Edge{id(h, "a"), id(h, "b")}));
}

TEST(TwoEdgeEnds, VirtualPair) {
  const Hypergraph h = graph("edge w1 x y\nedge w2 x y\n");
  const auto ends = two_edge_ends(h);
  ASSERT_EQ(ends.size(), 1u);
  EXPECT_EQ(ends[0].kind, EndKind::Virtual);
  EXPECT_EQ(ends[0].edge(), (Edge{id(h, "x"), id(h, "y")}));
  EXPECT_EQ(ends[0].generators, (std::vector<Vertex>{id(h, "w1"), id(h, "w2")}));
}

TEST(TwoEdgeEnds, NoneForLoneTriple) { EXPECT_TRUE(two_edge_ends(graph("edge a b c\n")).empty()); }

TEST(FindHotPath, OneRegularIntermediate) {
  const Hypergraph h = graph("edge a b\nedge b c d\nedge d e\n");
  const auto w = find_hot_path(h);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(h, *w));
  ASSERT_EQ(w->intermediates.size(), 1u);
  EXPECT_EQ(w->intermediates[0], (Edge{id(h, "b"), id(h, "c"), id(h, "d")}));
  const std::set<Edge> ends{w->start.edge(), w->end.edge()};
  EXPECT_EQ(ends, (std::set<Edge>{Edge{id(h, "a"), id(h, "b")}, Edge{id(h, "d"), id(h, "e")}}));
}

TEST(FindHotPath, DisjointEndsWithoutPath) {
  EXPECT_FALSE(find_hot_path(graph("edge a b\nedge c d\n")));
  EXPECT_FALSE(has_hot_path(graph("edge a b\nedge c d\n")));
}

TEST(FindHotPath, VirtualEndMeetsProperEdge) {
  const Game g = testing::game("player M\nedge w1 y x\nedge w2 y x\nedge x z\n");
  const auto w = find_hot_path(g.graph);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->intermediates.empty());
  const TwoEdgeEnd& virt = w->start.kind == EndKind::Virtual ? w->start : w->end;
  const TwoEdgeEnd& prop = w->start.kind == EndKind::Virtual ? w->end : w->start;
  EXPECT_EQ(virt.kind, EndKind::Virtual);
  EXPECT_EQ(virt.edge(), (Edge{id(g.graph, "x"), id(g.graph, "y")}));
  EXPECT_EQ(prop.edge(), (Edge{id(g.graph, "x"), id(g.graph, "z")}));
  EXPECT_EQ(oracle::full_minimax(g).winner, Player::Maker);
}

TEST(FindHotPath, VShape) {
  const Hypergraph h = graph("edge a b\nedge b c\n");
  const auto w = find_hot_path(h);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->intermediates.empty());
  EXPECT_EQ(w->opening_move(), id(h, "b"));
}

// Two virtual ends whose only generator choices share g: not a hot path, and
// the full game is a Breaker win.
TEST(FindHotPath, VirtualEndsMayNotShareAChosenGenerator) {
  const Game g = testing::game("player M\nedge a b c\nedge a b g\nedge a d e\nedge a d g\n");
  EXPECT_FALSE(find_hot_path(g.graph));
  EXPECT_TRUE(oracle::enumerate_hot_paths(g.graph, 8).empty());
  EXPECT_EQ(oracle::full_minimax(g).winner, Player::Breaker);
}

// Every hot path here runs through a non-regular 3-edge; shortening it yields
// two virtual ends that share a generator.
TEST(FindHotPath, OnlyHotPathHasIrregularIntermediate) {
  const Game g = testing::game(
      "player M\nedge v0 v1 v2\nedge v0 v2 v3\nedge v0 v2 v4\nedge v1 v2 v6\nedge v1 v3 v4\n"
      "edge v1 v3 v6\nedge v1 v5 v6\nedge v4 v5\n");
  const Hypergraph& h = g.graph;
  const auto all = oracle::enumerate_hot_paths(h, 8);
  ASSERT_FALSE(all.empty());
  for (const auto& p : all) EXPECT_FALSE(verify_witness(h, p, true));
  const auto w = find_hot_path(h);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(h, *w, false));
  EXPECT_TRUE(has_hot_path(h));
  EXPECT_EQ(oracle::full_minimax(g).winner, Player::Maker);
}

TEST(HasSingleton, Examples) {
  const Hypergraph h = graph("edge a\n");
  EXPECT_EQ(has_singleton(h), id(h, "a"));
  EXPECT_FALSE(has_singleton(graph("edge a b\n")));
  EXPECT_FALSE(has_singleton(testing::game("player B\nedge\n").graph));
}

TEST(VerifyWitness, RejectsBrokenPaths) {
  const Hypergraph h = graph("edge a b\nedge b c d\nedge d e\n");
  HotPathWitness w = *find_hot_path(h);
  std::string why;
  HotPathWitness same_ends = w;
  same_ends.end = same_ends.start;
  EXPECT_FALSE(verify_witness(h, same_ends, true, &why));
  HotPathWitness skipped = w;
  skipped.intermediates.clear();
  EXPECT_FALSE(verify_witness(h, skipped, true, &why));
  EXPECT_EQ(why, "sequence is not a linear path");
  HotPathWitness foreign = w;
  foreign.intermediates[0] = Edge{id(h, "a"), id(h, "c"), id(h, "e")};
  EXPECT_FALSE(verify_witness(h, foreign, false));
}

TEST(Properties, SoundAgainstOracle) {
  std::size_t found = 0;
  for (const Game& g0 : testing::random_games(1500, 3, 8, 101)) {
    const auto w = find_hot_path(g0.graph);
    ASSERT_EQ(w.has_value(), has_hot_path(g0.graph));
    if (!w) continue;
    ++found;
    ASSERT_TRUE(verify_witness(g0.graph, *w, false)) << write_game(g0);
    const Game g{g0.graph, Player::Maker};
    ASSERT_EQ(oracle::full_minimax(g).winner, Player::Maker) << write_game(g);
  }
  EXPECT_GT(found, 100u);
}

TEST(Properties, ExistenceMatchesEnumeration) {
  for (const Game& g : testing::random_games(3000, 3, 9, 202)) {
    ASSERT_EQ(has_hot_path(g.graph), oracle::any_hot_path(g.graph)) << write_game(g);
  }
}

TEST(Properties, EveryVShapeIsFound) {
  for (const Game& g : testing::random_games(1000, 3, 9, 303)) {
    bool vshape = false;
    for (const Edge& e : g.graph.edges()) {
      for (const Edge& f : g.graph.edges()) {
        vshape = vshape || (e.size() == 2 && f.size() == 2 && !(e == f) && e.shared(f) == 1);
      }
    }
    if (vshape) {
      ASSERT_TRUE(find_hot_path(g.graph)) << write_game(g);
    }
  }
}

TEST(Properties, ComponentsAreConnected) {
  for (const Game& g : testing::random_games(500, 6, 12, 404)) {
    const ComponentMap cm = component_map(g.graph);
    const auto& es = cm.regular_edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = 0; j < es.size(); ++j) {
        if (es[i].shared(es[j]) > 0) {
          ASSERT_EQ(cm.edge_component[i], cm.edge_component[j]);
        }
      }
    }
    // Reachability through intersecting regular edges matches the component id.
    for (std::size_t s = 0; s < es.size(); ++s) {
      std::vector<char> seen(es.size(), 0);
      std::deque<std::size_t> q{s};
      seen[s] = 1;
      while (!q.empty()) {
        const std::size_t i = q.front();
        q.pop_front();
        for (std::size_t j = 0; j < es.size(); ++j) {
          if (!seen[j] && es[i].shared(es[j]) > 0) {
            seen[j] = 1;
            q.push_back(j);
          }
        }
      }
      for (std::size_t j = 0; j < es.size(); ++j) {
        ASSERT_EQ(seen[j] != 0, cm.edge_component[s] == cm.edge_component[j]);
      }
    }
  }
}

TEST(Properties, Deterministic) {
  for (const Game& g : testing::random_games(500, 3, 10, 505)) {
    const Hypergraph copy = Hypergraph::build(g.graph.vertex_count(), g.graph.edges());
    ASSERT_EQ(find_hot_path(g.graph), find_hot_path(copy));
  }
}

}  // namespace
}  // namespace rank3
