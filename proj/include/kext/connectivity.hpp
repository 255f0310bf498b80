#pragma once

// Vertex connectivity through Menger: unit-capacity max-flow on the
// split-vertex digraph, with lexicographically least minimum cuts.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kext/graph.hpp"

namespace kext {

/// Removing `cut` from the host graph leaves `separated.first` and
/// `separated.second` in different components.
struct CutWitness {
  VertexSet cut;
  std::pair<Vertex, Vertex> separated{0, 0};

  friend bool operator==(const CutWitness&, const CutWitness&) = default;
};

struct Connectivity {
  std::size_t value = 0;
  std::optional<CutWitness> witness;  // present whenever value < n - 1
};

namespace detail {

// Residual network for internally vertex-disjoint u-v paths. Vertex w becomes
// in(w) = 2w and out(w) = 2w+1 joined by a unit arc; each edge becomes two
// uncapacitated arcs out(a)->in(b), out(b)->in(a).
class SplitFlow {
 public:
  SplitFlow(const Graph& g, Vertex s, Vertex t, const std::vector<char>& removed) : head_(2 * g.order(), -1) {
    for (Vertex w = 0; w < g.order(); ++w) {
      if (removed[w]) continue;
      int cap = (w == s || w == t) ? kBig : 1;
      add_arc(2 * w, 2 * w + 1, cap);
    }
    for (const Edge& e : g.edges()) {
      if (removed[e.u] || removed[e.v]) continue;
      add_arc(2 * e.u + 1, 2 * e.v, kBig);
      add_arc(2 * e.v + 1, 2 * e.u, kBig);
    }
    source_ = 2 * s + 1;
    sink_ = 2 * t;
  }

  std::size_t max_flow() {
    std::size_t flow = 0;
    std::vector<int> via(head_.size());
    for (;;) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(source_);
      via[source_] = -2;
      while (!q.empty() && via[sink_] == -1) {
        int x = q.front();
        q.pop();
        for (int a = head_[x]; a != -1; a = next_[a])
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            q.push(to_[a]);
          }
      }
      if (via[sink_] == -1) return flow;
      for (int x = sink_; x != source_; x = to_[via[x] ^ 1]) {
        cap_[via[x]] -= 1;
        cap_[via[x] ^ 1] += 1;
      }
      ++flow;
    }
  }

 private:
  static constexpr int kBig = std::numeric_limits<int>::max() / 4;

  void add_arc(int from, int to, int cap) {
    for (auto [a, b, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
      to_.push_back(b);
      cap_.push_back(c);
      next_.push_back(head_[a]);
      head_[a] = static_cast<int>(to_.size()) - 1;
    }
  }

  std::vector<int> head_, next_, to_, cap_;
  int source_ = 0;
  int sink_ = 0;
};

inline std::size_t separation_number(const Graph& g, Vertex u, Vertex v, const std::vector<char>& removed) {
  return SplitFlow(g, u, v, removed).max_flow();
}

// Greedy in ascending vertex order: keep w whenever some minimum cut contains
// the current choice plus w. The result is the lexicographically least
// minimum u-v cut.
inline VertexSet least_min_cut(const Graph& g, Vertex u, Vertex v, std::size_t size) {
  std::vector<char> removed(g.order(), 0);
  std::vector<Vertex> cut;
  for (Vertex w = 0; w < g.order() && cut.size() < size; ++w) {
    if (w == u || w == v) continue;
    removed[w] = 1;
    if (separation_number(g, u, v, removed) + cut.size() + 1 == size)
      cut.push_back(w);
    else
      removed[w] = 0;
  }
  return VertexSet(std::move(cut));
}

}  // namespace detail

/// Minimum vertex set separating non-adjacent u and v; ties resolved to the
/// lexicographically least set.
inline CutWitness min_vertex_cut(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw ArgumentError("min_vertex_cut needs distinct endpoints");
  if (g.adjacent(u, v)) throw ArgumentError("adjacent vertices have no separating vertex cut");
  std::vector<char> none(g.order(), 0);
  std::size_t size = detail::separation_number(g, u, v, none);
  return CutWitness{detail::least_min_cut(g, u, v, size), {std::min(u, v), std::max(u, v)}};
}

/// kappa(G). Conventions: kappa(K_n) = n-1 (so kappa(K_1) = 0) and
/// kappa = 0 for disconnected graphs with an empty witness cut.
inline Connectivity vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw ArgumentError("vertex connectivity of the empty graph is undefined");
  auto parts = components(g);
  if (parts.size() > 1) return {0, CutWitness{{}, {parts[0].front(), parts[1].front()}}};
  if (2 * g.size() == n * (n - 1)) return {n - 1, std::nullopt};

  std::vector<char> none(n, 0);
  std::size_t best = n;
  std::vector<std::pair<Vertex, Vertex>> attaining;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      std::size_t f = detail::separation_number(g, u, v, none);
      if (f < best) {
        best = f;
        attaining.clear();
      }
      if (f == best) attaining.emplace_back(u, v);
    }

  std::optional<CutWitness> chosen;
  for (auto [u, v] : attaining) {
    VertexSet cut = detail::least_min_cut(g, u, v, best);
    if (!chosen || cut < chosen->cut) chosen = CutWitness{std::move(cut), {u, v}};
  }
  return {best, std::move(chosen)};
}

inline bool is_k_connected(const Graph& g, std::size_t k) {
  if (g.order() < k + 1) return false;
  return vertex_connectivity(g).value >= k;
}

}  // namespace kext
