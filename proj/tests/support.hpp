#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "kext/corpus.hpp"
#include "kext/graph.hpp"
#include "kext/matching.hpp"

namespace kext::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> es;
  for (auto [u, v] : pairs) es.emplace_back(u, v);
  return Graph(n, es);
}

/// Every labeled graph on n vertices (n <= 6 in practice).
inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Graph> out;
  CorpusStream s(CorpusSpec::exhaustive(n));
  while (auto item = s.next()) out.push_back(std::move(item->graph));
  return out;
}

/// Random matching built by scanning edges in a shuffled order.
inline Matching random_maximal_matching(const Graph& g, std::mt19937_64& rng) {
  std::vector<Edge> es = g.edges();
  std::shuffle(es.begin(), es.end(), rng);
  std::vector<char> used(g.order(), 0);
  std::vector<Edge> picked;
  for (const Edge& e : es)
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      picked.push_back(e);
    }
  return Matching(std::move(picked));
}

/// Drops each edge of `m` with probability 1/2.
inline Matching thin(const Matching& m, std::mt19937_64& rng) {
  std::vector<Edge> keep;
  for (const Edge& e : m)
    if (rng() & 1U) keep.push_back(e);
  return Matching(std::move(keep));
}

}  // namespace kext::testing
