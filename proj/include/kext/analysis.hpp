#pragma once

// One-graph summary used by `kext analyze`.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kext/connectivity.hpp"
#include "kext/extendibility.hpp"
#include "kext/graph.hpp"
#include "kext/graph6.hpp"
#include "kext/matching.hpp"
#include "kext/serialize.hpp"
#include "kext/verifier.hpp"

namespace kext {

struct AnalysisRecord {
  std::optional<std::string> graph6;  // absent when n > 62
  std::size_t n = 0;
  std::size_t edges = 0;
  bool connected = false;
  std::optional<Bipartition> bipartition;
  std::optional<std::size_t> min_degree;  // absent for n = 0
  std::size_t matching_number = 0;
  bool perfect_matching = false;
  std::optional<Connectivity> connectivity;  // absent for n = 0
  std::optional<std::size_t> extendibility_number;
  std::vector<ExtendibilityCertificate> certificates;  // k = 0..kmax
};

inline AnalysisRecord analyze_graph(const Graph& g, std::size_t kmax) {
  AnalysisRecord r;
  if (g.order() <= graph6::kMaxShortOrder) r.graph6 = to_graph6(g);
  r.n = g.order();
  r.edges = g.size();
  r.connected = is_connected(g);
  r.bipartition = bipartition(g).sides;
  if (g.order() > 0) {
    r.min_degree = min_degree(g);
    r.connectivity = vertex_connectivity(g);
  }
  r.matching_number = matching_number(g);
  r.perfect_matching = 2 * r.matching_number == g.order();
  r.extendibility_number = extendibility_number(g);
  // Connected balanced bipartite graphs also get the Hall-surplus violator
  // next to the blocked matching.
  const bool hall_route = r.connected && r.bipartition && r.bipartition->x.size() == r.bipartition->y.size() &&
                          r.bipartition->x.size() <= kMaxHallSide;
  for (std::size_t k = 0; k <= kmax; ++k) {
    auto cert = is_k_extendible(g, k);
    if (hall_route && k >= 1 && cert.reason == FailureReason::BlockedMatching)
      cert.hall_violator = hall_surplus_check(g, *r.bipartition, k).violator;
    r.certificates.push_back(std::move(cert));
  }
  return r;
}

inline Json to_json(const AnalysisRecord& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  auto opt = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };
  Json conn = nullptr;
  if (r.connectivity) conn = {{"kappa", r.connectivity->value}, {"cut", to_json(r.connectivity->witness)}};
  return {{"graph6", r.graph6 ? Json(*r.graph6) : Json(nullptr)},
          {"n", r.n},
          {"edges", r.edges},
          {"connected", r.connected},
          {"bipartite", r.bipartition.has_value()},
          {"bipartition", to_json(r.bipartition)},
          {"min_degree", opt(r.min_degree)},
          {"matching_number", r.matching_number},
          {"perfect_matching", r.perfect_matching},
          {"connectivity", std::move(conn)},
          {"extendibility_number", opt(r.extendibility_number)},
          {"certificates", std::move(certs)},
          {"k0_convention", std::string(kZeroExtConvention)}};
}

}  // namespace kext
