#pragma once

// Exponential brute-force oracles. They read nothing but the adjacency of
// the input graph and share no code path with the polynomial algorithms they
// check; intended for graphs of desk scale (n <= ~16).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kext/graph.hpp"

namespace kext::oracle {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask all_vertices(const Graph& g) { return g.order() == 64 ? ~Mask{0} : bit(static_cast<Vertex>(g.order())) - 1; }

/// Largest matching inside the vertex set `alive`.
inline std::size_t max_matching_within(const std::vector<Mask>& adj, Mask alive) {
  if (alive == 0) return 0;
  auto v = static_cast<Vertex>(std::countr_zero(alive));
  Mask rest = alive & ~bit(v);
  std::size_t best = max_matching_within(adj, rest);  // v stays exposed
  for (Mask cand = adj[v] & rest; cand; cand &= cand - 1) {
    auto w = static_cast<Vertex>(std::countr_zero(cand));
    best = std::max(best, 1 + max_matching_within(adj, rest & ~bit(w)));
  }
  return best;
}

inline bool perfect_within(const std::vector<Mask>& adj, Mask alive) {
  if (alive == 0) return true;
  auto v = static_cast<Vertex>(std::countr_zero(alive));
  Mask rest = alive & ~bit(v);
  for (Mask cand = adj[v] & rest; cand; cand &= cand - 1)
    if (perfect_within(adj, rest & ~bit(static_cast<Vertex>(std::countr_zero(cand))))) return true;
  return false;
}

inline std::size_t matching_number(const Graph& g) { return max_matching_within(adjacency_masks(g), all_vertices(g)); }

inline bool has_perfect_matching(const Graph& g) { return perfect_within(adjacency_masks(g), all_vertices(g)); }

/// Every k-subset of E (in lexicographic order) whose edges are disjoint.
inline std::vector<std::vector<Edge>> matchings_of_size(const Graph& g, std::size_t k) {
  const auto& es = g.edges();
  std::vector<std::vector<Edge>> out;
  if (k > es.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Mask used = 0;
    bool ok = true;
    for (std::size_t i : idx) {
      Mask ends = bit(es[i].u) | bit(es[i].v);
      if (used & ends) ok = false;
      used |= ends;
    }
    if (ok) {
      std::vector<Edge> m;
      for (std::size_t i : idx) m.push_back(es[i]);
      out.push_back(std::move(m));
    }
    // next combination
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == es.size() - k + pos - 1) --pos;
    if (pos == 0) return out;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

inline bool connected_within(const std::vector<Mask>& adj, Mask alive) {
  if (alive == 0) return true;
  Mask seen = alive & (~alive + 1);
  Mask frontier = seen;
  while (frontier) {
    auto v = static_cast<Vertex>(std::countr_zero(frontier));
    frontier &= frontier - 1;
    Mask fresh = adj[v] & alive & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == alive;
}

inline bool reaches_within(const std::vector<Mask>& adj, Mask alive, Vertex from, Vertex to) {
  Mask seen = bit(from);
  Mask frontier = seen;
  while (frontier) {
    auto v = static_cast<Vertex>(std::countr_zero(frontier));
    frontier &= frontier - 1;
    Mask fresh = adj[v] & alive & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return (seen & bit(to)) != 0;
}

/// Definition read literally: size, connectivity, perfect matching, and a
/// perfect matching of G - V(M) for every matching M of k edges.
inline bool is_k_extendible(const Graph& g, std::size_t k) {
  if (g.order() < 2 * k + 2) return false;
  auto adj = adjacency_masks(g);
  Mask all = all_vertices(g);
  if (!connected_within(adj, all) || !perfect_within(adj, all)) return false;
  for (const auto& m : matchings_of_size(g, k)) {
    Mask rest = all;
    for (const Edge& e : m) rest &= ~(bit(e.u) | bit(e.v));
    if (!perfect_within(adj, rest)) return false;
  }
  return true;
}

inline int popcount(Mask m) { return std::popcount(m); }

/// max over S subset of `side` of |S| - |N(S)|.
inline std::size_t max_deficiency(const Graph& g, const VertexSet& side) {
  auto adj = adjacency_masks(g);
  const std::size_t s = side.size();
  long best = 0;
  for (Mask pick = 0; pick < (Mask{1} << s); ++pick) {
    Mask nb = 0;
    for (std::size_t i = 0; i < s; ++i)
      if (pick & (Mask{1} << i)) nb |= adj[side[i]];
    best = std::max(best, static_cast<long>(popcount(pick)) - popcount(nb));
  }
  return static_cast<std::size_t>(best);
}

/// |S| - |N(S)| for a given S.
inline long deficiency_of(const Graph& g, const VertexSet& s) {
  auto adj = adjacency_masks(g);
  Mask nb = 0;
  for (Vertex v : s) nb |= adj[v];
  return static_cast<long>(s.size()) - popcount(nb);
}

/// Smallest k such that deleting some k vertices disconnects the graph,
/// with n - 1 for complete graphs (and 0 for K_1 or disconnected graphs).
inline std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  auto adj = adjacency_masks(g);
  Mask all = all_vertices(g);
  for (std::size_t size = 0; size + 2 <= n; ++size)
    for (Mask cut = 0; cut <= all; ++cut) {
      if (static_cast<std::size_t>(popcount(cut)) != size) continue;
      if (!connected_within(adj, all & ~cut)) return size;
      if (cut == all) break;
    }
  return n == 0 ? 0 : n - 1;
}

/// Size of the smallest vertex set avoiding u, v whose removal separates them.
inline std::size_t min_separator(const Graph& g, Vertex u, Vertex v) {
  auto adj = adjacency_masks(g);
  Mask all = all_vertices(g);
  Mask others = all & ~(bit(u) | bit(v));
  std::size_t best = g.order();
  for (Mask cut = others;; cut = (cut - 1) & others) {
    auto size = static_cast<std::size_t>(popcount(cut));
    if (size < best && !reaches_within(adj, all & ~cut, u, v)) best = size;
    if (cut == 0) break;
  }
  return best;
}

}  // namespace kext::oracle
