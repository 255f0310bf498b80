#include <gtest/gtest.h>

#include <random>

#include "kext/corpus.hpp"
#include "kext/graph.hpp"
#include "support.hpp"

using namespace kext;
using kext::testing::make_graph;

TEST(Graph, EdgesAreCanonicalAndSymmetric) {
  Graph g = make_graph(4, {{3, 0}, {1, 2}, {2, 1}});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edges()[0], Edge(0, 3));
  EXPECT_EQ(g.edges()[1], Edge(1, 2));
  EXPECT_TRUE(g.adjacent(3, 0));
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_FALSE(g.adjacent(0, 0));
}

TEST(Graph, RejectsSelfLoopsAndOutOfRange) {
  EXPECT_THROW(Edge(2, 2), ArgumentError);
  EXPECT_THROW(make_graph(2, {{0, 2}}), ArgumentError);
}

TEST(Neighborhood, Examples) {
  Graph c4 = named::cycle(4);
  EXPECT_EQ(neighborhood(c4, {0}), (VertexSet{1, 3}));
  EXPECT_EQ(neighborhood(c4, {0, 2}), (VertexSet{1, 3}));
  Graph k33 = named::complete_bipartite(3, 3);
  EXPECT_EQ(neighborhood(k33, {0}), (VertexSet{3, 4, 5}));
}

TEST(Neighborhood, RestrictedToInducedSubgraph) {
  Graph k33 = named::complete_bipartite(3, 3);
  EXPECT_EQ(neighborhood(k33, {0}, VertexSet{0, 1, 4, 5}), (VertexSet{4, 5}));
  // a vertex of s outside `within` contributes nothing
  EXPECT_EQ(neighborhood(k33, {0}, VertexSet{3, 4}), VertexSet{});
  EXPECT_THROW(neighborhood(k33, {6}), ArgumentError);
}

TEST(Neighborhood, PropertyWithinAndAdjacent) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    Graph g = random_graph(9, 0.4, rng);
    std::vector<Vertex> s, w;
    for (Vertex v = 0; v < 9; ++v) {
      if (rng() % 3 == 0) s.push_back(v);
      if (rng() % 2 == 0) w.push_back(v);
    }
    VertexSet ss(s), ww(w);
    VertexSet nb = neighborhood(g, ss, ww);
    for (Vertex x : nb) {
      EXPECT_TRUE(ww.contains(x));
      bool ok = false;
      for (Vertex y : ss) ok = ok || (ww.contains(y) && g.adjacent(x, y));
      EXPECT_TRUE(ok);
    }
    for (Vertex x : ww)
      for (Vertex y : ss)
        if (ww.contains(y) && g.adjacent(x, y)) {
          EXPECT_TRUE(nb.contains(x));
        }
  }
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(named::complete(2)), 1u);
  EXPECT_EQ(min_degree(named::cycle(4)), 2u);
  EXPECT_EQ(min_degree(named::complete_bipartite(1, 3)), 1u);
  EXPECT_THROW(min_degree(Graph(0, {})), ArgumentError);
}

TEST(DeleteVertices, Examples) {
  auto p = delete_vertices(named::cycle(4), {0});
  EXPECT_EQ(p.graph, named::path(3));
  EXPECT_EQ(p.to_original, (std::vector<Vertex>{1, 2, 3}));

  auto k22 = delete_vertices(named::complete_bipartite(3, 3), {0, 3});
  EXPECT_EQ(k22.graph, named::complete_bipartite(2, 2));

  Graph c5 = named::cycle(5);
  auto same = delete_vertices(c5, {});
  EXPECT_EQ(same.graph, c5);
  for (Vertex v = 0; v < 5; ++v) {
    EXPECT_EQ(same.to_original[v], v);
    EXPECT_EQ(same.from_original[v], v);
  }
}

TEST(DeleteVertices, PropertyKeepsExactlyTheSurvivingEdges) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    Graph g = random_graph(8, 0.5, rng);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 8; ++v)
      if (rng() % 3 == 0) s.push_back(v);
    VertexSet removed(s);
    auto sub = delete_vertices(g, removed);
    ASSERT_EQ(sub.graph.order(), 8 - removed.size());
    std::size_t expected = 0;
    for (const Edge& e : g.edges())
      if (!removed.contains(e.u) && !removed.contains(e.v)) {
        ++expected;
        EXPECT_TRUE(sub.graph.adjacent(*sub.from_original[e.u], *sub.from_original[e.v]));
      }
    EXPECT_EQ(sub.graph.size(), expected);
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(components(named::cycle(4)), (std::vector<VertexSet>{{0, 1, 2, 3}}));
  EXPECT_EQ(components(make_graph(4, {{0, 1}, {2, 3}})), (std::vector<VertexSet>{{0, 1}, {2, 3}}));
  EXPECT_EQ(components(Graph(3, {})), (std::vector<VertexSet>{{0}, {1}, {2}}));
}

TEST(Components, PropertyPartitionOfConnectedParts) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    Graph g = random_graph(10, 0.15, rng);
    auto parts = components(g);
    std::vector<int> owner(10, -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) {
        EXPECT_LT(parts[i - 1].front(), parts[i].front());
      }
      for (Vertex v : parts[i]) {
        EXPECT_EQ(owner[v], -1);
        owner[v] = static_cast<int>(i);
      }
      std::vector<Vertex> complement;
      for (Vertex v = 0; v < 10; ++v)
        if (!parts[i].contains(v)) complement.push_back(v);
      EXPECT_EQ(components(delete_vertices(g, VertexSet(complement)).graph).size(), 1u);
    }
    for (Vertex v = 0; v < 10; ++v) EXPECT_NE(owner[v], -1);
    for (const Edge& e : g.edges()) EXPECT_EQ(owner[e.u], owner[e.v]);
  }
}

TEST(Bipartition, Examples) {
  auto c4 = bipartition(named::cycle(4));
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4.sides->x, (VertexSet{0, 2}));
  EXPECT_EQ(c4.sides->y, (VertexSet{1, 3}));

  auto tri = bipartition(named::cycle(3));
  EXPECT_FALSE(tri);
  EXPECT_EQ(tri.odd_cycle, (std::vector<Vertex>{0, 1, 2}));

  auto k33 = bipartition(named::complete_bipartite(3, 3));
  ASSERT_TRUE(k33);
  EXPECT_EQ(k33.sides->x, (VertexSet{0, 1, 2}));
  EXPECT_EQ(k33.sides->y, (VertexSet{3, 4, 5}));
}

TEST(Bipartition, MinimumOfEachComponentGoesToX) {
  auto r = bipartition(make_graph(5, {{1, 4}, {0, 3}, {2, 3}}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r.sides->x, (VertexSet{0, 1, 2}));
  EXPECT_EQ(r.sides->y, (VertexSet{3, 4}));
}

TEST(Bipartition, PropertySidesValidOrOddCycle) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 500; ++round) {
    Graph g = random_graph(9, 0.25, rng);
    auto r = bipartition(g);
    if (r) {
      EXPECT_TRUE(is_valid_bipartition(g, *r.sides));
      continue;
    }
    const auto& cyc = r.odd_cycle;
    ASSERT_GE(cyc.size(), 3u);
    EXPECT_EQ(cyc.size() % 2, 1u);
    EXPECT_EQ(VertexSet(cyc).size(), cyc.size());
    for (std::size_t i = 0; i < cyc.size(); ++i) EXPECT_TRUE(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
  }
}
