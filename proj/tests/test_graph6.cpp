#include <gtest/gtest.h>

#include <random>

#include "kext/corpus.hpp"
#include "kext/graph6.hpp"
#include "support.hpp"

using namespace kext;

TEST(Graph6, HandEncodedExamples) {
  EXPECT_EQ(parse_graph6("A?"), Graph(2, {}));
  EXPECT_EQ(parse_graph6("A_"), named::complete(2));
  EXPECT_EQ(to_graph6(Graph(0, {})), "?");
  EXPECT_EQ(to_graph6(named::complete(2)), "A_");
  // C4: bits x01 x02 x12 x03 x13 x23 = 1 0 1 1 0 1 -> 45 + 63 = 'l'
  EXPECT_EQ(to_graph6(named::cycle(4)), "Cl");
  EXPECT_EQ(parse_graph6("Cl"), named::cycle(4));
  // cross-checked against an independent encoder (networkx)
  EXPECT_EQ(to_graph6(named::complete_bipartite(3, 3)), "EFz_");
}

TEST(Graph6, ErrorsNameTheByteOffset) {
  auto offset_of = [](const char* text) -> std::optional<std::size_t> {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::nullopt;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("A"), 1u);      // truncated
  EXPECT_EQ(offset_of("A__"), 2u);    // trailing garbage
  EXPECT_EQ(offset_of("A "), 1u);     // byte 32 out of range
  EXPECT_EQ(offset_of("A\x7f"), 1u);  // byte 127 out of range
  EXPECT_EQ(offset_of("A`"), 1u);     // padding bit set
  EXPECT_EQ(offset_of("~??"), 0u);    // long-form header
}

TEST(Graph6, LargeOrderIsUnsupported) {
  EXPECT_NO_THROW(to_graph6(named::path(62)));
  EXPECT_THROW(to_graph6(named::path(63)), UnsupportedError);
}

TEST(Graph6, RoundTripOnCorpus) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const Graph& g : kext::testing::all_graphs(n)) {
      std::string s = to_graph6(g);
      EXPECT_EQ(parse_graph6(s), g);
      EXPECT_EQ(to_graph6(parse_graph6(s)), s);
    }
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    std::size_t n = rng() % 63;
    Graph g = random_graph(n, 0.3, rng);
    std::string s = to_graph6(g);
    EXPECT_EQ(parse_graph6(s), g);
    EXPECT_EQ(to_graph6(parse_graph6(s)), s);
  }
}

TEST(EdgeList, Examples) {
  EXPECT_EQ(parse_edge_list("2\n0 1"), named::complete(2));
  EXPECT_EQ(parse_edge_list("4\n0 1\n1 2\n2 3\n3 0"), named::cycle(4));
  EXPECT_EQ(parse_edge_list("3\n2 1\n1 2\n\n"), kext::testing::make_graph(3, {{1, 2}}));
  EXPECT_EQ(to_edge_list(named::complete(2)), "2\n0 1");
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) -> std::optional<std::size_t> {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::nullopt;
  };
  EXPECT_EQ(line_of("2\n0 0"), 2u);
  EXPECT_EQ(line_of("3\n0 1\n1 3"), 3u);
  EXPECT_EQ(line_of("3\n0 x"), 2u);
  EXPECT_EQ(line_of("x"), 1u);
  EXPECT_TRUE(line_of(""));
}
