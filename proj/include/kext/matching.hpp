#pragma once

// Matchings: Edmonds' blossom search for augmenting paths in general graphs,
// a Hopcroft-Karp fast path for bipartite graphs, perfect-matching extension,
// lexicographic enumeration of fixed-size matchings and the Koenig-Ore
// deficiency with a witness set.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "kext/graph.hpp"

namespace kext {

/// Set of pairwise vertex-disjoint edges, stored as a sorted edge list.
class Matching {
 public:
  Matching() = default;
  Matching(std::initializer_list<Edge> edges) : Matching(std::vector<Edge>(edges)) {}
  explicit Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    std::vector<Vertex> ends;
    for (const Edge& e : edges_) {
      ends.push_back(e.u);
      ends.push_back(e.v);
    }
    std::sort(ends.begin(), ends.end());
    if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
      throw ArgumentError("matching edges share an endpoint");
  }

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  /// V(M): every endpoint of an edge in the matching.
  VertexSet covered() const {
    std::vector<Vertex> vs;
    for (const Edge& e : edges_) {
      vs.push_back(e.u);
      vs.push_back(e.v);
    }
    return VertexSet(std::move(vs));
  }

  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Throws ArgumentError unless every edge of `m` is an edge of `g`.
inline void validate_matching(const Graph& g, const Matching& m) {
  for (const Edge& e : m) {
    if (e.v >= g.order())
      throw ArgumentError("matching edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    if (!g.adjacent(e.u, e.v))
      throw ArgumentError("matching edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
}

namespace detail {
inline constexpr int kNone = -1;

inline std::vector<int> mates_of(const Graph& g, const Matching& m) {
  std::vector<int> mate(g.order(), kNone);
  for (const Edge& e : m) {
    mate[e.u] = static_cast<int>(e.v);
    mate[e.v] = static_cast<int>(e.u);
  }
  return mate;
}

inline Matching matching_from_mates(const std::vector<int>& mate) {
  std::vector<Edge> es;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] != kNone && static_cast<int>(v) < mate[v]) es.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(mate[v]));
  return Matching(std::move(es));
}
}  // namespace detail

/// Simple path whose edges alternate non-matching/matching with respect to
/// some reference matching, both ends uncovered.
struct AlternatingPath {
  std::vector<Vertex> vertices;

  std::size_t edge_count() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

inline bool is_augmenting(const Graph& g, const Matching& m, const AlternatingPath& p) {
  const auto& vs = p.vertices;
  if (vs.size() < 2 || vs.size() % 2 != 0) return false;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : vs) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  const VertexSet cov = m.covered();
  if (cov.contains(vs.front()) || cov.contains(vs.back())) return false;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
    bool should_match = i % 2 == 1;
    if (m.contains(Edge(vs[i], vs[i + 1])) != should_match) return false;
  }
  return true;
}

namespace detail {

// Single-root Edmonds search over a mate array. Blossoms are contracted
// implicitly through `base_`; `parent_` records the odd-vertex predecessor so
// that an augmenting path can be read back through contracted blossoms.
class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g) : g_(g), n_(g.order()) {}

  /// Returns the augmenting path starting at `root`, root first.
  std::optional<std::vector<Vertex>> from(Vertex root, const std::vector<int>& mate) {
    mate_ = &mate;
    used_.assign(n_, 0);
    parent_.assign(n_, kNone);
    base_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<int>(i);

    std::queue<int> q;
    used_[root] = 1;
    q.push(static_cast<int>(root));
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (Vertex tov : g_.neighbors(static_cast<Vertex>(v))) {
        int to = static_cast<int>(tov);
        if (base_[v] == base_[to] || mate[v] == to) continue;
        if (to == static_cast<int>(root) || (mate[to] != kNone && parent_[mate[to]] != kNone)) {
          int cur = lowest_common_base(v, to);
          blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(static_cast<int>(i));
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate[to] == kNone) return read_path(to);
          used_[mate[to]] = 1;
          q.push(mate[to]);
        }
      }
    }
    return std::nullopt;
  }

 private:
  int lowest_common_base(int a, int b) {
    const auto& mate = *mate_;
    std::vector<char> on_path(n_, 0);
    for (;;) {
      a = base_[a];
      on_path[a] = 1;
      if (mate[a] == kNone) break;
      a = parent_[mate[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path[b]) return b;
      b = parent_[(*mate_)[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    const auto& mate = *mate_;
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate[v]]] = 1;
      parent_[v] = child;
      child = mate[v];
      v = parent_[mate[v]];
    }
  }

  std::vector<Vertex> read_path(int end) const {
    const auto& mate = *mate_;
    std::vector<Vertex> path;
    for (int v = end; v != kNone;) {
      int pv = parent_[v];
      path.push_back(static_cast<Vertex>(v));
      path.push_back(static_cast<Vertex>(pv));
      v = mate[pv];
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  const Graph& g_;
  std::size_t n_;
  const std::vector<int>* mate_ = nullptr;
  std::vector<char> used_, blossom_;
  std::vector<int> parent_, base_;
};

inline void flip_along(std::vector<int>& mate, const std::vector<Vertex>& path) {
  for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
    mate[path[i]] = static_cast<int>(path[i + 1]);
    mate[path[i + 1]] = static_cast<int>(path[i]);
  }
}

}  // namespace detail

/// An M-augmenting path, or nothing when `m` is already maximum (Berge).
/// Roots are tried in ascending order, so the result is deterministic.
inline std::optional<AlternatingPath> find_augmenting_path(const Graph& g, const Matching& m) {
  validate_matching(g, m);
  auto mate = detail::mates_of(g, m);
  detail::BlossomSearch search(g);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (mate[root] != detail::kNone) continue;
    if (auto p = search.from(root, mate)) return AlternatingPath{std::move(*p)};
  }
  return std::nullopt;
}

/// M' = (E(P) \ M) u (M \ E(P)).
inline Matching augment(const Graph& g, const Matching& m, const AlternatingPath& p) {
  validate_matching(g, m);
  if (!is_augmenting(g, m, p)) throw ArgumentError("path is not augmenting for the given matching");
  std::vector<Edge> path_edges;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) path_edges.emplace_back(p.vertices[i], p.vertices[i + 1]);
  std::sort(path_edges.begin(), path_edges.end());
  std::vector<Edge> out;
  std::set_symmetric_difference(path_edges.begin(), path_edges.end(), m.begin(), m.end(), std::back_inserter(out));
  return Matching(std::move(out));
}

/// Maximum-cardinality matching via Edmonds' blossom algorithm. Starts from
/// the empty matching and grows once from each exposed root in ascending
/// order; a root that fails once can never be matched later.
inline Matching maximum_matching(const Graph& g) {
  std::vector<int> mate(g.order(), detail::kNone);
  detail::BlossomSearch search(g);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (mate[root] != detail::kNone) continue;
    if (auto p = search.from(root, mate)) detail::flip_along(mate, *p);
  }
  return detail::matching_from_mates(mate);
}

/// Hopcroft-Karp on a bipartite graph with the given sides.
inline Matching bipartite_maximum_matching(const Graph& g, const Bipartition& bp) {
  require_bipartition(g, bp);
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> mate(g.order(), detail::kNone);
  std::vector<int> dist(g.order(), kInf);

  auto layer = [&] {
    std::queue<Vertex> q;
    bool reachable_free = false;
    for (Vertex x : bp.x) {
      dist[x] = mate[x] == detail::kNone ? 0 : kInf;
      if (dist[x] == 0) q.push(x);
    }
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        int nx = mate[y];
        if (nx == detail::kNone) {
          reachable_free = true;
        } else if (dist[nx] == kInf) {
          dist[nx] = dist[x] + 1;
          q.push(static_cast<Vertex>(nx));
        }
      }
    }
    return reachable_free;
  };

  std::function<bool(Vertex)> descend = [&](Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      int nx = mate[y];
      if (nx == detail::kNone || (dist[nx] == dist[x] + 1 && descend(static_cast<Vertex>(nx)))) {
        mate[x] = static_cast<int>(y);
        mate[y] = static_cast<int>(x);
        return true;
      }
    }
    dist[x] = kInf;
    return false;
  };

  while (layer())
    for (Vertex x : bp.x)
      if (mate[x] == detail::kNone) descend(x);
  return detail::matching_from_mates(mate);
}

inline std::size_t matching_number(const Graph& g) { return maximum_matching(g).size(); }

inline bool has_perfect_matching(const Graph& g) {
  return g.order() % 2 == 0 && 2 * matching_number(g) == g.order();
}

/// A perfect matching of `g` containing `m`, if one exists. Computed as `m`
/// plus a perfect matching of g - V(m), mapped back to original labels.
inline std::optional<Matching> extends_to_perfect(const Graph& g, const Matching& m) {
  validate_matching(g, m);
  if (g.order() % 2 != 0) return std::nullopt;
  Subgraph rest = delete_vertices(g, m.covered());
  Matching inner = maximum_matching(rest.graph);
  if (2 * inner.size() != rest.graph.order()) return std::nullopt;
  std::vector<Edge> all = m.edges();
  for (const Edge& e : inner) all.push_back(rest.original(e));
  return Matching(std::move(all));
}

/// Pull-style stream of every matching of exactly `k` edges, in
/// lexicographic order of canonical edge lists. Single consumer; the graph
/// must outlive the enumerator.
class MatchingEnumerator {
 public:
  MatchingEnumerator(const Graph& g, std::size_t k) : g_(&g), k_(k), load_(g.order(), 0) {}

  std::optional<Matching> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      if (fill_from(0)) return current();
      done_ = true;
      return std::nullopt;
    }
    while (!chosen_.empty()) {
      std::size_t last = chosen_.back();
      pop();
      if (fill_from(last + 1)) return current();
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  bool fill_from(std::size_t start) {
    if (chosen_.size() == k_) return true;
    const auto& es = g_->edges();
    for (std::size_t j = start; j + (k_ - chosen_.size()) <= es.size(); ++j) {
      if (load_[es[j].u] || load_[es[j].v]) continue;
      push(j);
      if (fill_from(j + 1)) return true;
      pop();
    }
    return false;
  }

  void push(std::size_t j) {
    const Edge& e = g_->edges()[j];
    load_[e.u] = load_[e.v] = 1;
    chosen_.push_back(j);
  }

  void pop() {
    const Edge& e = g_->edges()[chosen_.back()];
    load_[e.u] = load_[e.v] = 0;
    chosen_.pop_back();
  }

  Matching current() const {
    std::vector<Edge> es;
    for (std::size_t j : chosen_) es.push_back(g_->edges()[j]);
    return Matching(std::move(es));
  }

  const Graph* g_;
  std::size_t k_;
  std::vector<char> load_;
  std::vector<std::size_t> chosen_;
  bool started_ = false;
  bool done_ = false;
};

inline std::vector<Matching> enumerate_matchings(const Graph& g, std::size_t k) {
  std::vector<Matching> out;
  MatchingEnumerator it(g, k);
  while (auto m = it.next()) out.push_back(std::move(*m));
  return out;
}

/// max over S subset of X of |S| - |N(S)|, with a set attaining it.
struct DeficiencyWitness {
  std::size_t value = 0;
  VertexSet witness;

  friend bool operator==(const DeficiencyWitness&, const DeficiencyWitness&) = default;
};

/// Koenig-Ore deficiency in polynomial time: S is the set of X-vertices
/// reachable by alternating paths from X-vertices left exposed by a maximum
/// matching. When the deficiency is 0 this is the empty set.
inline DeficiencyWitness koenig_ore_deficiency(const Graph& g, const Bipartition& bp) {
  Matching mm = bipartite_maximum_matching(g, bp);
  auto mate = detail::mates_of(g, mm);
  std::vector<char> reached(g.order(), 0);
  std::queue<Vertex> q;
  for (Vertex x : bp.x)
    if (mate[x] == detail::kNone) {
      reached[x] = 1;
      q.push(x);
    }
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : g.neighbors(x)) {
      if (reached[y]) continue;
      reached[y] = 1;
      // y is matched, otherwise mm would not be maximum.
      auto nx = static_cast<Vertex>(mate[y]);
      if (!reached[nx]) {
        reached[nx] = 1;
        q.push(nx);
      }
    }
  }
  std::vector<Vertex> s;
  for (Vertex x : bp.x)
    if (reached[x]) s.push_back(x);
  return DeficiencyWitness{bp.x.size() - mm.size(), VertexSet(std::move(s))};
}

}  // namespace kext
