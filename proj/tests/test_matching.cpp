#include <gtest/gtest.h>

#include <random>

#include "kext/corpus.hpp"
#include "kext/matching.hpp"
#include "kext/oracle.hpp"
#include "support.hpp"

using namespace kext;
using kext::testing::all_graphs;
using kext::testing::make_graph;

namespace {

bool is_perfect_matching_of(const Graph& g, const Matching& m) {
  validate_matching(g, m);
  return 2 * m.size() == g.order();
}

}  // namespace

TEST(Matching, RejectsSharedEndpoints) { EXPECT_THROW(Matching({Edge(0, 1), Edge(1, 2)}), ArgumentError); }

TEST(AugmentingPath, Examples) {
  Graph p4 = named::path(4);
  auto p = find_augmenting_path(p4, Matching{Edge(1, 2)});
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(find_augmenting_path(named::cycle(4), Matching{Edge(0, 1), Edge(2, 3)}));
}

TEST(AugmentingPath, InvalidMatchingIsRejected) {
  Graph p4 = named::path(4);
  EXPECT_THROW(find_augmenting_path(p4, Matching{Edge(0, 2)}), ArgumentError);
  EXPECT_THROW(find_augmenting_path(p4, Matching{Edge(0, 9)}), ArgumentError);
}

TEST(AugmentingPath, ThroughABlossom) {
  // Root 0 lies on the odd cycle 0-1-2-3-4; the exposed vertex 5 hangs off 1,
  // which is only reachable on an even step by walking around the cycle.
  Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 5}});
  Matching m{Edge(1, 2), Edge(3, 4)};
  auto p = find_augmenting_path(g, m);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices, (std::vector<Vertex>{0, 4, 3, 2, 1, 5}));
  EXPECT_TRUE(is_augmenting(g, m, *p));
  EXPECT_EQ(augment(g, m, *p).size(), 3u);
}

TEST(AugmentingPath, BergeAgainstBruteForceExhaustive) {
  std::mt19937_64 rng(101);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      const std::size_t alpha = oracle::matching_number(g);
      Matching m = kext::testing::random_maximal_matching(g, rng);
      if (rng() & 1U) m = kext::testing::thin(m, rng);
      auto p = find_augmenting_path(g, m);
      EXPECT_EQ(!p.has_value(), m.size() == alpha) << to_graph6(g);
      if (p) {
        EXPECT_TRUE(is_augmenting(g, m, *p)) << to_graph6(g);
      }
    }
}

TEST(AugmentingPath, BergeAgainstBruteForceRandom) {
  std::mt19937_64 rng(202);
  for (int round = 0; round < 3000; ++round) {
    std::size_t n = 2 + rng() % 9;
    Graph g = random_graph(n, 0.2 + 0.1 * static_cast<double>(rng() % 6), rng);
    const std::size_t alpha = oracle::matching_number(g);
    Matching m = kext::testing::random_maximal_matching(g, rng);
    if (rng() & 1U) m = kext::testing::thin(m, rng);
    auto p = find_augmenting_path(g, m);
    ASSERT_EQ(!p.has_value(), m.size() == alpha) << to_graph6(g);
    if (p) {
      ASSERT_TRUE(is_augmenting(g, m, *p)) << to_graph6(g);
    }
  }
}

TEST(Augment, Examples) {
  Graph p4 = named::path(4);
  Matching m{Edge(1, 2)};
  EXPECT_EQ(augment(p4, m, AlternatingPath{{0, 1, 2, 3}}), (Matching{Edge(0, 1), Edge(2, 3)}));
  EXPECT_THROW(augment(p4, m, AlternatingPath{{0, 1}}), ArgumentError);
  EXPECT_THROW(augment(p4, m, AlternatingPath{{0, 1, 2}}), ArgumentError);
}

TEST(Augment, CoveredSetGrowsByTheEndpoints) {
  std::mt19937_64 rng(303);
  int checked = 0;
  while (checked < 1000) {
    std::size_t n = 4 + rng() % 9;
    Graph g = random_graph(n, 0.35, rng);
    Matching m = kext::testing::thin(kext::testing::random_maximal_matching(g, rng), rng);
    auto p = find_augmenting_path(g, m);
    if (!p) continue;
    ++checked;
    Matching next = augment(g, m, *p);
    ASSERT_EQ(next.size(), m.size() + 1);
    std::vector<Vertex> expect = m.covered().members();
    expect.push_back(p->vertices.front());
    expect.push_back(p->vertices.back());
    ASSERT_EQ(next.covered(), VertexSet(expect));
  }
}

TEST(MaximumMatching, Examples) {
  EXPECT_EQ(maximum_matching(named::cycle(4)).size(), 2u);
  EXPECT_EQ(maximum_matching(named::complete_bipartite(1, 3)).size(), 1u);
  EXPECT_EQ(matching_number(named::cycle(4)), 2u);
  EXPECT_EQ(matching_number(named::complete_bipartite(1, 3)), 1u);
  EXPECT_EQ(matching_number(Graph(0, {})), 0u);
}

TEST(MaximumMatching, AgreesWithBruteForceExhaustive) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      Matching m = maximum_matching(g);
      validate_matching(g, m);
      ASSERT_EQ(m.size(), oracle::matching_number(g)) << to_graph6(g);
    }
}

TEST(MaximumMatching, AgreesWithBruteForceRandom) {
  std::mt19937_64 rng(404);
  for (int round = 0; round < 400; ++round) {
    std::size_t n = 7 + rng() % 6;
    Graph g = random_graph(n, 0.15 + 0.1 * static_cast<double>(rng() % 6), rng);
    Matching m = maximum_matching(g);
    validate_matching(g, m);
    ASSERT_EQ(m.size(), oracle::matching_number(g)) << to_graph6(g);
  }
}

TEST(MaximumMatching, Deterministic) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 50; ++round) {
    Graph g = random_graph(12, 0.3, rng);
    EXPECT_EQ(maximum_matching(g), maximum_matching(g));
  }
}

TEST(MaximumMatching, HopcroftKarpAgreesOnBipartite) {
  std::mt19937_64 rng(505);
  for (int round = 0; round < 500; ++round) {
    std::size_t nx = 1 + rng() % 8, ny = 1 + rng() % 8;
    Graph g = random_bipartite(nx, ny, 0.3, rng);
    auto bp = bipartition(g);
    ASSERT_TRUE(bp);
    Matching hk = bipartite_maximum_matching(g, *bp.sides);
    validate_matching(g, hk);
    ASSERT_EQ(hk.size(), maximum_matching(g).size());
  }
}

TEST(PerfectMatching, Examples) {
  EXPECT_TRUE(has_perfect_matching(named::complete(2)));
  EXPECT_FALSE(has_perfect_matching(named::path(3)));
  EXPECT_TRUE(has_perfect_matching(named::cycle(6)));
  EXPECT_EQ(has_perfect_matching(named::cycle(6)), oracle::has_perfect_matching(named::cycle(6)));
}

TEST(ExtendsToPerfect, Examples) {
  EXPECT_EQ(extends_to_perfect(named::cycle(4), Matching{Edge(0, 1)}), (Matching{Edge(0, 1), Edge(2, 3)}));
  EXPECT_FALSE(extends_to_perfect(named::path(4), Matching{Edge(1, 2)}));
  auto pm = extends_to_perfect(named::cycle(6), Matching{});
  ASSERT_TRUE(pm);
  EXPECT_TRUE(is_perfect_matching_of(named::cycle(6), *pm));
  EXPECT_THROW(extends_to_perfect(named::path(4), Matching{Edge(0, 2)}), ArgumentError);
}

TEST(ExtendsToPerfect, DefinitionalEquivalence) {
  std::mt19937_64 rng(606);
  for (std::size_t n = 2; n <= 6; n += 2)
    for (const Graph& g : all_graphs(n)) {
      Matching m = kext::testing::thin(kext::testing::random_maximal_matching(g, rng), rng);
      auto ext = extends_to_perfect(g, m);
      bool expected = has_perfect_matching(delete_vertices(g, m.covered()).graph);
      ASSERT_EQ(ext.has_value(), expected);
      if (ext) {
        EXPECT_TRUE(is_perfect_matching_of(g, *ext));
        for (const Edge& e : m) EXPECT_TRUE(ext->contains(e));
      }
    }
}

TEST(EnumerateMatchings, Examples) {
  Graph c4 = named::cycle(4);
  EXPECT_EQ(enumerate_matchings(c4, 1).size(), 4u);
  EXPECT_EQ(enumerate_matchings(c4, 2),
            (std::vector<Matching>{Matching{Edge(0, 1), Edge(2, 3)}, Matching{Edge(0, 3), Edge(1, 2)}}));
  EXPECT_EQ(enumerate_matchings(named::complete_bipartite(3, 3), 2).size(), 18u);
  EXPECT_EQ(enumerate_matchings(c4, 0), (std::vector<Matching>{Matching{}}));
  EXPECT_TRUE(enumerate_matchings(c4, 3).empty());
  EXPECT_EQ(enumerate_matchings(Graph(0, {}), 0).size(), 1u);
}

TEST(EnumerateMatchings, MatchesSubsetEnumerationInOrder) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const Graph& g : all_graphs(n))
      for (std::size_t k = 0; k <= 3; ++k) {
        auto got = enumerate_matchings(g, k);
        auto want = oracle::matchings_of_size(g, k);
        ASSERT_EQ(got.size(), want.size()) << to_graph6(g) << " k=" << k;
        for (std::size_t i = 0; i < got.size(); ++i) ASSERT_EQ(got[i].edges(), want[i]);
      }
}

TEST(EnumerateMatchings, StreamStaysExhausted) {
  Graph c4 = named::cycle(4);
  MatchingEnumerator it(c4, 2);
  EXPECT_TRUE(it.next());
  EXPECT_TRUE(it.next());
  EXPECT_FALSE(it.next());
  EXPECT_FALSE(it.next());
}

TEST(KoenigOre, StarExamples) {
  Graph star = named::complete_bipartite(1, 3);
  auto centre = koenig_ore_deficiency(star, Bipartition{{0}, {1, 2, 3}});
  EXPECT_EQ(centre.value, 0u);
  EXPECT_EQ(centre.witness, VertexSet{});
  auto leaves = koenig_ore_deficiency(star, Bipartition{{1, 2, 3}, {0}});
  EXPECT_EQ(leaves.value, 2u);
  EXPECT_EQ(leaves.witness, (VertexSet{1, 2, 3}));
  EXPECT_THROW(koenig_ore_deficiency(star, Bipartition{{0, 1}, {2, 3}}), ArgumentError);
}

TEST(KoenigOre, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(707);
  for (int round = 0; round < 1000; ++round) {
    std::size_t nx = 1 + rng() % 9, ny = 1 + rng() % 9;
    Graph g = random_bipartite(nx, ny, 0.1 + 0.1 * static_cast<double>(rng() % 5), rng);
    std::vector<Vertex> xs, ys;
    for (Vertex v = 0; v < nx + ny; ++v) (v < nx ? xs : ys).push_back(v);
    Bipartition bp{VertexSet(xs), VertexSet(ys)};
    auto d = koenig_ore_deficiency(g, bp);
    ASSERT_EQ(d.value, oracle::max_deficiency(g, bp.x));
    ASSERT_EQ(oracle::deficiency_of(g, d.witness), static_cast<long>(d.value));
    ASSERT_EQ(d.value + matching_number(g), nx);
    for (Vertex v : d.witness) ASSERT_TRUE(bp.x.contains(v));
    if (d.value == 0) {
      ASSERT_TRUE(d.witness.empty());
    }
  }
}
