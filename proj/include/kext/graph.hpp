#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, plus the handful of
// structural queries every other module builds on.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kext {

using Vertex = std::uint32_t;

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonically oriented edge: u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw ArgumentError("edge endpoints must differ: " + std::to_string(a));
  }

  bool touches(Vertex w) const noexcept { return u == w || v == w; }
  Vertex other(Vertex w) const noexcept { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init) : VertexSet(std::vector<Vertex>(init)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  Vertex front() const { return members_.front(); }
  Vertex back() const { return members_.back(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple graph. Adjacency is kept both as a symmetric bit matrix
/// (constant-time `adjacent`) and as sorted neighbour lists (ascending scans).
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::span<const Edge> edges) : n_(n), words_((n + 63) / 64), bits_(n * words_), adj_(n) {
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n)
        throw ArgumentError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for n=" +
                            std::to_string(n));
      if (e.u == e.v) throw ArgumentError("self-loop at " + std::to_string(e.u));
      set_bit(e.u, e.v);
      set_bit(e.v, e.u);
    }
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (adjacent(u, v)) adj_[u].push_back(v);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) edges_.emplace_back(u, v);
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    if (u >= n_ || v >= n_) return false;
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  /// All edges, canonical orientation, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void set_bit(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

inline void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order())
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.order()));
}

inline void check_vertices(const Graph& g, const VertexSet& s) {
  if (!s.empty()) check_vertex(g, s.back());
}

/// N_H(S) where H = G[within] (or G itself when `within` is absent).
/// The result may intersect `s`.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s, const std::optional<VertexSet>& within = std::nullopt) {
  check_vertices(g, s);
  std::vector<char> allowed(g.order(), 1);
  if (within) {
    check_vertices(g, *within);
    std::fill(allowed.begin(), allowed.end(), 0);
    for (Vertex v : *within) allowed[v] = 1;
  }
  std::vector<char> hit(g.order(), 0);
  for (Vertex u : s) {
    if (!allowed[u]) continue;
    for (Vertex w : g.neighbors(u))
      if (allowed[w]) hit[w] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hit[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

inline std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw ArgumentError("min_degree of the empty graph is undefined");
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

/// Result of removing vertices: the induced subgraph on the survivors with
/// dense relabeling, and the maps between old and new ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_original;                 // new id -> old id
  std::vector<std::optional<Vertex>> from_original;  // old id -> new id, absent if deleted

  Edge original(const Edge& e) const { return Edge(to_original[e.u], to_original[e.v]); }
};

inline Subgraph delete_vertices(const Graph& g, const VertexSet& s) {
  check_vertices(g, s);
  Subgraph sub;
  sub.from_original.assign(g.order(), std::nullopt);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    sub.from_original[v] = static_cast<Vertex>(sub.to_original.size());
    sub.to_original.push_back(v);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    auto a = sub.from_original[e.u];
    auto b = sub.from_original[e.v];
    if (a && b) kept.emplace_back(*a, *b);
  }
  sub.graph = Graph(sub.to_original.size(), kept);
  return sub;
}

/// Connected components, each sorted, ordered by their minimum vertex.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexSet> parts;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> part{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < part.size(); ++head)
      for (Vertex w : g.neighbors(part[head]))
        if (!seen[w]) {
          seen[w] = 1;
          part.push_back(w);
        }
    parts.emplace_back(std::move(part));
  }
  return parts;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

struct Bipartition {
  VertexSet x;
  VertexSet y;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// True iff (x, y) covers V disjointly with no edge inside either side.
inline bool is_valid_bipartition(const Graph& g, const Bipartition& bp) {
  if (bp.x.size() + bp.y.size() != g.order()) return false;
  std::vector<int> side(g.order(), -1);
  for (Vertex v : bp.x) {
    if (v >= g.order()) return false;
    side[v] = 0;
  }
  for (Vertex v : bp.y) {
    if (v >= g.order() || side[v] != -1) return false;
    side[v] = 1;
  }
  for (const Edge& e : g.edges())
    if (side[e.u] == side[e.v]) return false;
  return true;
}

inline void require_bipartition(const Graph& g, const Bipartition& bp) {
  if (!is_valid_bipartition(g, bp)) throw ArgumentError("invalid bipartition for this graph");
}

/// Either a 2-colouring or an odd cycle proving none exists.
struct BipartitionResult {
  std::optional<Bipartition> sides;
  std::vector<Vertex> odd_cycle;  // consecutive vertices adjacent, last adjacent to first

  explicit operator bool() const noexcept { return sides.has_value(); }
};

/// The side of each component containing its minimum vertex goes to X.
inline BipartitionResult bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n), depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    parent[root] = root;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          // Same-depth-parity endpoints: climb both BFS-tree branches to their meeting point.
          std::vector<Vertex> left{u}, right{w};
          Vertex a = u, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          BipartitionResult res;
          res.odd_cycle.assign(left.rbegin(), left.rend());
          res.odd_cycle.insert(res.odd_cycle.end(), right.begin(), right.end());
          auto pivot = std::min_element(res.odd_cycle.begin(), res.odd_cycle.end());
          std::rotate(res.odd_cycle.begin(), pivot, res.odd_cycle.end());
          if (res.odd_cycle.size() > 2 && res.odd_cycle[1] > res.odd_cycle.back())
            std::reverse(res.odd_cycle.begin() + 1, res.odd_cycle.end());
          return res;
        }
      }
    }
  }
  std::vector<Vertex> xs, ys;
  for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? xs : ys).push_back(v);
  return BipartitionResult{Bipartition{VertexSet(std::move(xs)), VertexSet(std::move(ys))}, {}};
}

/// Bitmask view for graphs with at most 64 vertices.
inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.order() > 64) throw UnsupportedError("bitmask view needs n <= 64");
  std::vector<std::uint64_t> masks(g.order(), 0);
  for (const Edge& e : g.edges()) {
    masks[e.u] |= std::uint64_t{1} << e.v;
    masks[e.v] |= std::uint64_t{1} << e.u;
  }
  return masks;
}

// Common named graphs used across tests, tools and docs.
namespace named {

inline Graph path(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  if (n >= 3) es.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, es);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

/// K_{a,b} with sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) es.emplace_back(i, static_cast<Vertex>(a + j));
  return Graph(a + b, es);
}

}  // namespace named

}  // namespace kext
