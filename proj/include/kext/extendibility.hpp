#pragma once

// k-extendibility: the definitional checker, the bipartite Hall-surplus
// characterization, edge peeling and the extendibility number.
//
// Convention: a graph is 0-extendible iff it is connected, has at least two
// vertices and has a perfect matching (the definition read with the empty
// matching).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kext/graph.hpp"
#include "kext/matching.hpp"

namespace kext {

enum class FailureReason { SizeTooSmall, Disconnected, NoPerfectMatching, BlockedMatching };

inline std::string_view to_string(FailureReason r) {
  switch (r) {
    case FailureReason::SizeTooSmall: return "SizeTooSmall";
    case FailureReason::Disconnected: return "Disconnected";
    case FailureReason::NoPerfectMatching: return "NoPerfectMatching";
    case FailureReason::BlockedMatching: return "BlockedMatching";
  }
  return "?";
}

/// A set A of X with |N(A)| < |A| + k.
struct HallViolator {
  VertexSet a;
  std::size_t neighborhood_size = 0;

  friend bool operator==(const HallViolator&, const HallViolator&) = default;
};

/// One tested k-matching together with a perfect matching extending it.
struct ExtensionExhibit {
  Matching matching;
  Matching extension;
};

struct ExtendibilityCertificate {
  std::size_t k = 0;
  bool extendible = false;
  std::optional<FailureReason> reason;
  std::optional<Matching> blocked;             // size-k matching with no perfect extension
  std::optional<HallViolator> hall_violator;   // bipartite route only
  std::vector<ExtensionExhibit> exhibits;      // yes-verdicts: bounded sample
  std::size_t matchings_checked = 0;
};

inline constexpr std::size_t kExhibitLimit = 4;

namespace detail {

inline ExtendibilityCertificate refuse(std::size_t k, FailureReason r) {
  ExtendibilityCertificate c;
  c.k = k;
  c.reason = r;
  return c;
}

// The three structural conditions shared by every k. On success returns the
// perfect matching found.
inline std::optional<ExtendibilityCertificate> check_preconditions(const Graph& g, std::size_t k, Matching& pm) {
  if (g.order() < 2 * k + 2) return refuse(k, FailureReason::SizeTooSmall);
  if (!is_connected(g)) return refuse(k, FailureReason::Disconnected);
  pm = maximum_matching(g);
  if (2 * pm.size() != g.order()) return refuse(k, FailureReason::NoPerfectMatching);
  return std::nullopt;
}

}  // namespace detail

/// Definitional check. Conditions are tested in a fixed order (size,
/// connectivity, perfect matching, then every size-k matching in
/// lexicographic order), so the reason and the blocked witness (the least
/// failing matching) are deterministic.
inline ExtendibilityCertificate is_k_extendible(const Graph& g, std::size_t k) {
  Matching pm;
  if (auto fail = detail::check_preconditions(g, k, pm)) return *fail;

  ExtendibilityCertificate cert;
  cert.k = k;
  MatchingEnumerator it(g, k);
  while (auto m = it.next()) {
    ++cert.matchings_checked;
    auto ext = extends_to_perfect(g, *m);
    if (!ext) {
      cert.reason = FailureReason::BlockedMatching;
      cert.blocked = std::move(*m);
      cert.exhibits.clear();
      return cert;
    }
    if (cert.exhibits.size() < kExhibitLimit) cert.exhibits.push_back({std::move(*m), std::move(*ext)});
  }
  cert.extendible = true;
  return cert;
}

/// Outcome of the Hall-surplus scan: empty violator means the condition holds.
struct HallSurplusResult {
  std::optional<HallViolator> violator;

  bool holds() const noexcept { return !violator.has_value(); }
};

inline constexpr std::size_t kMaxHallSide = 20;

/// Exhaustive scan of A subset of X, 1 <= |A| <= |X| - k, for |N(A)| < |A| + k.
/// Reports the lexicographically least violator of minimum size.
inline HallSurplusResult hall_surplus_check(const Graph& g, const Bipartition& bp, std::size_t k) {
  require_bipartition(g, bp);
  if (bp.x.size() != bp.y.size()) throw ArgumentError("Hall-surplus check needs a balanced bipartition");
  if (k < 1) throw ArgumentError("Hall-surplus check needs k >= 1");
  const std::size_t side = bp.x.size();
  if (side > kMaxHallSide) throw UnsupportedError("Hall-surplus check limited to |X| <= 20");
  if (side < k + 1) return {};

  std::vector<std::size_t> y_index(g.order(), 0);
  for (std::size_t i = 0; i < side; ++i) y_index[bp.y[i]] = i;
  std::vector<std::uint32_t> nbr(side, 0);
  for (std::size_t i = 0; i < side; ++i)
    for (Vertex w : g.neighbors(bp.x[i])) nbr[i] |= std::uint32_t{1} << y_index[w];

  std::vector<std::size_t> pick;
  std::optional<HallViolator> found;
  auto scan = [&](auto&& self, std::size_t want, std::size_t start, std::uint32_t mask) -> bool {
    if (pick.size() == want) {
      auto covered = static_cast<std::size_t>(std::popcount(mask));
      if (covered >= want + k) return false;
      std::vector<Vertex> a;
      for (std::size_t i : pick) a.push_back(bp.x[i]);
      found = HallViolator{VertexSet(std::move(a)), covered};
      return true;
    }
    for (std::size_t i = start; i + (want - pick.size()) <= side; ++i) {
      pick.push_back(i);
      if (self(self, want, i + 1, mask | nbr[i])) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t want = 1; want + k <= side; ++want)
    if (scan(scan, want, 0, 0)) return {found};
  return {};
}

namespace detail {

// A violator A leaves fewer than |A| + k neighbours. Matching
// j = |N(A)| - |A| + 1 vertices of N(A) into X \ A strands A; the matching is
// then grown to size k by augmenting paths, which only enlarges the covered
// set and so keeps A stranded.
inline std::optional<Matching> blocked_from_violator(const Graph& g, const Bipartition& bp, const HallViolator& hv,
                                                     std::size_t k) {
  VertexSet nbrs = neighborhood(g, hv.a);
  std::vector<Edge> cross;
  for (const Edge& e : g.edges()) {
    bool u_out = bp.x.contains(e.u) && !hv.a.contains(e.u) && nbrs.contains(e.v);
    bool v_out = bp.x.contains(e.v) && !hv.a.contains(e.v) && nbrs.contains(e.u);
    if (u_out || v_out) cross.push_back(e);
  }
  const std::size_t need = nbrs.size() + 1 - hv.a.size();
  Matching between = bipartite_maximum_matching(Graph(g.order(), cross), bp);
  if (between.size() < need || need > k) return std::nullopt;

  Matching m(std::vector<Edge>(between.begin(), between.begin() + static_cast<std::ptrdiff_t>(need)));
  while (m.size() < k) {
    auto path = find_augmenting_path(g, m);
    if (!path) return std::nullopt;
    m = augment(g, m, *path);
  }
  if (extends_to_perfect(g, m)) return std::nullopt;
  return m;
}

}  // namespace detail

/// Decision through the Hall-surplus characterization of bipartite
/// k-extendibility. Hypotheses (size, connectivity, perfect matching) are
/// checked first in the same order as `is_k_extendible`. A violator is turned
/// into a blocked k-matching; if the direct construction does not apply the
/// least blocked matching from enumeration is reported instead.
inline ExtendibilityCertificate is_k_extendible_bipartite(const Graph& g, const Bipartition& bp, std::size_t k) {
  require_bipartition(g, bp);
  if (bp.x.size() != bp.y.size()) throw ArgumentError("bipartite extendibility needs a balanced bipartition");
  Matching pm;
  if (auto fail = detail::check_preconditions(g, k, pm)) return *fail;

  ExtendibilityCertificate cert;
  cert.k = k;
  if (k == 0) {
    cert.extendible = true;
    cert.exhibits.push_back({Matching{}, pm});
    return cert;
  }
  auto hall = hall_surplus_check(g, bp, k);
  if (hall.holds()) {
    cert.extendible = true;
    return cert;
  }
  cert.reason = FailureReason::BlockedMatching;
  cert.hall_violator = hall.violator;
  cert.blocked = detail::blocked_from_violator(g, bp, *hall.violator, k);
  if (!cert.blocked) cert.blocked = is_k_extendible(g, k).blocked;
  return cert;
}

/// G - {u, v} for an edge uv, relabeled densely.
inline Subgraph peel(const Graph& g, const Edge& e) {
  check_vertex(g, e.v);
  if (!g.adjacent(e.u, e.v))
    throw ArgumentError("peel: (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  return delete_vertices(g, VertexSet{e.u, e.v});
}

/// Certificates for k = 0 .. (n-2)/2. Empty when n < 2.
inline std::vector<ExtendibilityCertificate> extendibility_profile(const Graph& g) {
  std::vector<ExtendibilityCertificate> out;
  for (std::size_t k = 0; 2 * k + 2 <= g.order(); ++k) out.push_back(is_k_extendible(g, k));
  return out;
}

/// Largest k with a yes-verdict, scanning every k the size bound allows.
/// Absent when the graph is not even 0-extendible.
inline std::optional<std::size_t> extendibility_number(const Graph& g) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; 2 * k + 2 <= g.order(); ++k) {
    auto cert = is_k_extendible(g, k);
    if (cert.extendible) {
      best = k;
    } else if (cert.reason != FailureReason::BlockedMatching) {
      break;  // size, connectivity and perfect matching do not improve with k
    }
  }
  return best;
}

}  // namespace kext
