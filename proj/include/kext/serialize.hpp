#pragma once

// JSON encodings for certificates and witnesses. Every vertex id is written
// in the labels of the graph the object refers to; sets and edge lists are
// sorted.

#include <optional>

#include "json.hpp"
#include "kext/connectivity.hpp"
#include "kext/extendibility.hpp"
#include "kext/graph.hpp"
#include "kext/matching.hpp"

namespace kext {

using Json = nlohmann::json;

inline Json to_json(const VertexSet& s) { return Json(s.members()); }

inline Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json to_json(const Matching& m) {
  Json out = Json::array();
  for (const Edge& e : m) out.push_back(to_json(e));
  return out;
}

inline Json to_json(const Bipartition& bp) { return {{"X", to_json(bp.x)}, {"Y", to_json(bp.y)}}; }

inline Json to_json(const CutWitness& w) {
  return {{"cut", to_json(w.cut)}, {"separated", Json::array({w.separated.first, w.separated.second})}};
}

inline Json to_json(const HallViolator& h) { return {{"A", to_json(h.a)}, {"neighborhood_size", h.neighborhood_size}}; }

inline Json to_json(const DeficiencyWitness& d) { return {{"value", d.value}, {"witness", to_json(d.witness)}}; }

inline Json to_json(const AlternatingPath& p) { return Json(p.vertices); }

template <class T>
Json to_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

inline Json to_json(const ExtendibilityCertificate& c) {
  Json exhibits = Json::array();
  for (const auto& ex : c.exhibits) exhibits.push_back({{"matching", to_json(ex.matching)}, {"extension", to_json(ex.extension)}});
  return {
      {"k", c.k},
      {"verdict", c.extendible ? "yes" : "no"},
      {"reason", c.reason ? Json(std::string(to_string(*c.reason))) : Json(nullptr)},
      {"witness", to_json(c.blocked)},
      {"hall_violator", to_json(c.hall_violator)},
      {"exhibits", std::move(exhibits)},
      {"matchings_checked", c.matchings_checked},
  };
}

/// Certificate relabeled into the original graph after vertex deletion.
inline ExtendibilityCertificate relabeled(const ExtendibilityCertificate& c, const Subgraph& sub) {
  auto map_matching = [&](const Matching& m) {
    std::vector<Edge> es;
    for (const Edge& e : m) es.push_back(sub.original(e));
    return Matching(std::move(es));
  };
  ExtendibilityCertificate out = c;
  if (c.blocked) out.blocked = map_matching(*c.blocked);
  for (auto& ex : out.exhibits) {
    ex.matching = map_matching(ex.matching);
    ex.extension = map_matching(ex.extension);
  }
  if (c.hall_violator) {
    std::vector<Vertex> a;
    for (Vertex v : c.hall_violator->a) a.push_back(sub.to_original[v]);
    out.hall_violator->a = VertexSet(std::move(a));
  }
  return out;
}

}  // namespace kext
