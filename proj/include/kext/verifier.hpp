#pragma once

// Corpus-wide checks of the structural results on k-extendible graphs. Each
// property is an implication, so a graph outside its hypotheses is reported
// as inapplicable rather than as a pass. Any `Violated` outcome points at a
// defect somewhere in the stack.

#include <array>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kext/connectivity.hpp"
#include "kext/corpus.hpp"
#include "kext/extendibility.hpp"
#include "kext/graph.hpp"
#include "kext/graph6.hpp"
#include "kext/matching.hpp"
#include "kext/oracle.hpp"
#include "kext/parallel.hpp"
#include "kext/serialize.hpp"
#include "kext/version.hpp"

namespace kext {

enum class PropertyId { P21, P22, P23, T31, T32, KO, MonoExt };

inline constexpr std::array kAllProperties = {PropertyId::P21, PropertyId::P22, PropertyId::P23, PropertyId::T31,
                                              PropertyId::T32, PropertyId::KO,  PropertyId::MonoExt};

inline std::string_view to_string(PropertyId p) {
  switch (p) {
    case PropertyId::P21: return "P21";
    case PropertyId::P22: return "P22";
    case PropertyId::P23: return "P23";
    case PropertyId::T31: return "T31";
    case PropertyId::T32: return "T32";
    case PropertyId::KO: return "KO";
    case PropertyId::MonoExt: return "MONO-EXT";
  }
  return "?";
}

inline std::optional<PropertyId> parse_property(std::string_view name) {
  for (PropertyId p : kAllProperties)
    if (to_string(p) == name) return p;
  return std::nullopt;
}

enum class Status { Holds, Violated, Inapplicable };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Violated: return "violated";
    case Status::Inapplicable: return "inapplicable";
  }
  return "?";
}

struct PropertyOutcome {
  PropertyId property = PropertyId::P21;
  std::size_t graph_id = 0;
  Status status = Status::Inapplicable;
  std::string detail;  // failed hypothesis, or what went wrong
  Json payload;        // certificates for violations
};

/// Per-graph memo so the properties share extendibility and connectivity work.
class GraphFacts {
 public:
  explicit GraphFacts(const Graph& g) : g_(g) {}

  const Graph& graph() const noexcept { return g_; }

  const ExtendibilityCertificate& ext(std::size_t k) {
    auto it = ext_.find(k);
    if (it == ext_.end()) it = ext_.emplace(k, is_k_extendible(g_, k)).first;
    return it->second;
  }

  bool extendible(std::size_t k) { return ext(k).extendible; }

  const Connectivity& connectivity() {
    if (!kappa_) kappa_ = vertex_connectivity(g_);
    return *kappa_;
  }

  bool k_connected(std::size_t k) { return g_.order() >= k + 1 && connectivity().value >= k; }

  const BipartitionResult& sides() {
    if (!sides_) sides_ = bipartition(g_);
    return *sides_;
  }

 private:
  const Graph& g_;
  std::map<std::size_t, ExtendibilityCertificate> ext_;
  std::optional<Connectivity> kappa_;
  std::optional<BipartitionResult> sides_;
};

namespace detail {

inline PropertyOutcome outcome(PropertyId p, Status s, std::string detail = {}, Json payload = nullptr) {
  return PropertyOutcome{p, 0, s, std::move(detail), std::move(payload)};
}

inline Json connectivity_json(const Connectivity& c) { return {{"kappa", c.value}, {"cut", to_json(c.witness)}}; }

}  // namespace detail

/// k-extendible implies (k-1)-extendible, for k = 1..kmax.
inline PropertyOutcome verify_monotonicity(GraphFacts& f, std::size_t kmax) {
  if (kmax < 1) throw ArgumentError("verify_monotonicity needs kmax >= 1");
  bool applied = false;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (!f.extendible(k)) continue;
    applied = true;
    if (!f.extendible(k - 1))
      return detail::outcome(PropertyId::P21, Status::Violated, "k-extendible but not (k-1)-extendible at k=" + std::to_string(k),
                             {{"k", k}, {"upper", to_json(f.ext(k))}, {"lower", to_json(f.ext(k - 1))}});
  }
  if (!applied) return detail::outcome(PropertyId::P21, Status::Inapplicable, "not k-extendible for any k in 1..kmax");
  return detail::outcome(PropertyId::P21, Status::Holds);
}

/// 1-extendible implies 2-connected.
inline PropertyOutcome verify_one_ext_two_conn(GraphFacts& f) {
  if (!f.extendible(1)) return detail::outcome(PropertyId::P22, Status::Inapplicable, "not 1-extendible");
  if (!f.k_connected(2))
    return detail::outcome(PropertyId::P22, Status::Violated, "1-extendible but not 2-connected",
                           {{"certificate", to_json(f.ext(1))}, {"connectivity", detail::connectivity_json(f.connectivity())}});
  return detail::outcome(PropertyId::P22, Status::Holds);
}

/// For k >= 2: k-extendible implies G - {u, v} is (k-1)-extendible for every edge uv.
inline PropertyOutcome verify_peeling(GraphFacts& f, std::size_t k) {
  if (k < 2) throw ArgumentError("verify_peeling needs k >= 2");
  if (!f.extendible(k)) return detail::outcome(PropertyId::P23, Status::Inapplicable, "not " + std::to_string(k) + "-extendible");
  for (const Edge& e : f.graph().edges()) {
    Subgraph rest = peel(f.graph(), e);
    auto cert = is_k_extendible(rest.graph, k - 1);
    if (!cert.extendible)
      return detail::outcome(PropertyId::P23, Status::Violated,
                             "peeling an edge of a " + std::to_string(k) + "-extendible graph lost extendibility",
                             {{"k", k}, {"edge", to_json(e)}, {"certificate", to_json(relabeled(cert, rest))}});
  }
  return detail::outcome(PropertyId::P23, Status::Holds);
}

/// verify_peeling for every k in 2..kmax.
inline PropertyOutcome verify_peeling_range(GraphFacts& f, std::size_t kmax) {
  bool applied = false;
  for (std::size_t k = 2; k <= kmax; ++k) {
    auto o = verify_peeling(f, k);
    if (o.status == Status::Violated) return o;
    applied = applied || o.status == Status::Holds;
  }
  if (!applied) return detail::outcome(PropertyId::P23, Status::Inapplicable, "not k-extendible for any k in 2..kmax");
  return detail::outcome(PropertyId::P23, Status::Holds);
}

/// k-extendible implies (k+1)-connected, for k = 1..kmax.
inline PropertyOutcome verify_connectivity_bound(GraphFacts& f, std::size_t kmax) {
  if (kmax < 1) throw ArgumentError("verify_connectivity_bound needs kmax >= 1");
  bool applied = false;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (!f.extendible(k)) continue;
    applied = true;
    if (!f.k_connected(k + 1))
      return detail::outcome(PropertyId::T31, Status::Violated,
                             std::to_string(k) + "-extendible but not " + std::to_string(k + 1) + "-connected",
                             {{"k", k}, {"certificate", to_json(f.ext(k))}, {"connectivity", detail::connectivity_json(f.connectivity())}});
  }
  if (!applied) return detail::outcome(PropertyId::T31, Status::Inapplicable, "not k-extendible for any k in 1..kmax");
  return detail::outcome(PropertyId::T31, Status::Holds);
}

/// Definitional checker and Hall-surplus characterization agree, for every
/// k in 1..kmax with |G| >= 2k+2, on connected balanced bipartite graphs with
/// a perfect matching. Both certificates are also re-checked directly.
inline PropertyOutcome verify_bipartite_characterization(GraphFacts& f, std::size_t kmax) {
  if (kmax < 1) throw ArgumentError("verify_bipartite_characterization needs kmax >= 1");
  const Graph& g = f.graph();
  auto inapplicable = [](std::string why) { return detail::outcome(PropertyId::T32, Status::Inapplicable, std::move(why)); };
  if (g.order() == 0) return inapplicable("empty graph");
  if (!is_connected(g)) return inapplicable("disconnected");
  const auto& sides = f.sides();
  if (!sides) return inapplicable("not bipartite");
  const Bipartition& bp = *sides.sides;
  if (bp.x.size() != bp.y.size()) return inapplicable("unbalanced bipartition");
  if (bp.x.size() > kMaxHallSide) return inapplicable("bipartition side larger than 20");
  if (!f.ext(0).extendible) return inapplicable("no perfect matching");

  bool applied = false;
  for (std::size_t k = 1; k <= kmax && g.order() >= 2 * k + 2; ++k) {
    applied = true;
    const auto& def = f.ext(k);
    auto hall = is_k_extendible_bipartite(g, bp, k);
    auto fail = [&](std::string why) {
      return detail::outcome(PropertyId::T32, Status::Violated, std::move(why),
                             {{"k", k}, {"bipartition", to_json(bp)}, {"definitional", to_json(def)}, {"hall", to_json(hall)}});
    };
    if (def.extendible != hall.extendible) return fail("verdicts differ at k=" + std::to_string(k));
    if (!hall.extendible) {
      const auto& hv = hall.hall_violator;
      if (!hv || hv->a.empty() || hv->a.size() + k > bp.x.size() || neighborhood(g, hv->a).size() != hv->neighborhood_size ||
          hv->neighborhood_size >= hv->a.size() + k)
        return fail("Hall violator does not re-verify");
      if (!hall.blocked || hall.blocked->size() != k || extends_to_perfect(g, *hall.blocked))
        return fail("blocked-matching witness does not re-verify");
    }
  }
  if (!applied) return inapplicable("|G| < 2k+2 for every k in 1..kmax");
  return detail::outcome(PropertyId::T32, Status::Holds);
}

/// alpha'(G) = |X| - max_S (|S| - |N(S)|): matching number against the
/// subset-enumeration deficiency, and the polynomial witness against both.
inline PropertyOutcome verify_koenig_ore(GraphFacts& f) {
  const Graph& g = f.graph();
  const auto& sides = f.sides();
  if (!sides) return detail::outcome(PropertyId::KO, Status::Inapplicable, "not bipartite");
  const Bipartition& bp = *sides.sides;
  if (bp.x.size() > kMaxHallSide) return detail::outcome(PropertyId::KO, Status::Inapplicable, "bipartition side larger than 20");
  const std::size_t alpha = matching_number(g);
  const std::size_t brute = oracle::max_deficiency(g, bp.x);
  const DeficiencyWitness poly = koenig_ore_deficiency(g, bp);
  const long attained = oracle::deficiency_of(g, poly.witness);
  if (alpha + brute != bp.x.size() || poly.value != brute || attained != static_cast<long>(brute))
    return detail::outcome(PropertyId::KO, Status::Violated, "deficiency formula mismatch",
                           {{"bipartition", to_json(bp)},
                            {"matching_number", alpha},
                            {"enumerated_deficiency", brute},
                            {"polynomial", to_json(poly)},
                            {"witness_attains", attained}});
  return detail::outcome(PropertyId::KO, Status::Holds);
}

/// The set of k with a yes-verdict is downward closed, its maximum is the
/// extendibility number and never exceeds (n-2)/2.
inline PropertyOutcome verify_extendibility_profile(GraphFacts& f) {
  const Graph& g = f.graph();
  if (g.order() < 2 || !f.extendible(0)) return detail::outcome(PropertyId::MonoExt, Status::Inapplicable, "not 0-extendible");
  std::optional<std::size_t> first_no;
  std::size_t last_yes = 0;
  for (std::size_t k = 0; 2 * k + 2 <= g.order(); ++k) {
    if (f.extendible(k)) {
      if (first_no)
        return detail::outcome(PropertyId::MonoExt, Status::Violated, "yes-verdict above a no-verdict",
                               {{"no", to_json(f.ext(*first_no))}, {"yes", to_json(f.ext(k))}});
      last_yes = k;
    } else if (!first_no) {
      first_no = k;
    }
  }
  auto number = extendibility_number(g);
  if (!number || *number != last_yes || 2 * *number + 2 > g.order())
    return detail::outcome(PropertyId::MonoExt, Status::Violated, "extendibility number disagrees with profile",
                           {{"profile_max", last_yes}, {"extendibility_number", number ? Json(*number) : Json(nullptr)}});
  return detail::outcome(PropertyId::MonoExt, Status::Holds);
}

// Convenience overloads on a bare graph.
inline PropertyOutcome verify_monotonicity(const Graph& g, std::size_t kmax) {
  GraphFacts f(g);
  return verify_monotonicity(f, kmax);
}
inline PropertyOutcome verify_one_ext_two_conn(const Graph& g) {
  GraphFacts f(g);
  return verify_one_ext_two_conn(f);
}
inline PropertyOutcome verify_peeling(const Graph& g, std::size_t k) {
  GraphFacts f(g);
  return verify_peeling(f, k);
}
inline PropertyOutcome verify_connectivity_bound(const Graph& g, std::size_t kmax) {
  GraphFacts f(g);
  return verify_connectivity_bound(f, kmax);
}
inline PropertyOutcome verify_bipartite_characterization(const Graph& g, std::size_t kmax) {
  GraphFacts f(g);
  return verify_bipartite_characterization(f, kmax);
}
inline PropertyOutcome verify_koenig_ore(const Graph& g) {
  GraphFacts f(g);
  return verify_koenig_ore(f);
}
inline PropertyOutcome verify_extendibility_profile(const Graph& g) {
  GraphFacts f(g);
  return verify_extendibility_profile(f);
}

inline PropertyOutcome run_property(GraphFacts& f, PropertyId p, std::size_t kmax) {
  switch (p) {
    case PropertyId::P21: return verify_monotonicity(f, kmax);
    case PropertyId::P22: return verify_one_ext_two_conn(f);
    case PropertyId::P23: return verify_peeling_range(f, kmax);
    case PropertyId::T31: return verify_connectivity_bound(f, kmax);
    case PropertyId::T32: return verify_bipartite_characterization(f, kmax);
    case PropertyId::KO: return verify_koenig_ore(f);
    case PropertyId::MonoExt: return verify_extendibility_profile(f);
  }
  throw ArgumentError("unknown property");
}

struct PropertyTally {
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t inapplicable = 0;

  std::size_t total() const noexcept { return holds + violated + inapplicable; }
};

struct ViolationRecord {
  PropertyOutcome outcome;
  std::string graph;  // graph6, or edge-list text for n > 62
  std::optional<std::size_t> line;
};

struct Report {
  CorpusSpec spec;
  std::vector<PropertyId> properties;
  std::size_t kmax = 3;
  std::size_t graphs = 0;
  std::map<PropertyId, PropertyTally> tallies;
  std::vector<ViolationRecord> violations;
  std::vector<CorpusIssue> skipped;
  std::string version = std::string(kVersion);
  double wall_seconds = 0.0;

  bool clean() const noexcept { return violations.empty(); }
};

inline constexpr std::size_t kDefaultKmax = 3;
inline constexpr std::size_t kBatchSize = 512;

/// Evaluates one property on one graph; `run_property` unless a caller
/// substitutes its own (tests, fault injection).
using PropertyRunner = std::function<PropertyOutcome(GraphFacts&, PropertyId, std::size_t)>;

/// Streams the corpus in batches, runs the selected properties on each graph
/// (possibly in parallel) and aggregates in corpus order.
inline Report run_corpus(CorpusStream& corpus, const std::vector<PropertyId>& properties, std::size_t kmax,
                         std::size_t workers = default_workers(), const PropertyRunner& runner = run_property) {
  if (properties.empty()) throw ArgumentError("run_corpus needs at least one property");
  if (kmax < 1) throw ArgumentError("run_corpus needs kmax >= 1");
  const auto started = std::chrono::steady_clock::now();

  Report report;
  report.spec = corpus.spec();
  report.properties = properties;
  report.kmax = kmax;
  for (PropertyId p : properties) report.tallies[p];

  std::vector<CorpusItem> batch;
  std::vector<std::vector<PropertyOutcome>> results;
  auto flush = [&] {
    results.assign(batch.size(), {});
    parallel_for(batch.size(), workers, [&](std::size_t i) {
      GraphFacts facts(batch[i].graph);
      for (PropertyId p : properties) {
        auto o = runner(facts, p, kmax);
        o.graph_id = batch[i].index;
        results[i].push_back(std::move(o));
      }
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++report.graphs;
      for (auto& o : results[i]) {
        auto& t = report.tallies[o.property];
        if (o.status == Status::Holds) ++t.holds;
        if (o.status == Status::Inapplicable) ++t.inapplicable;
        if (o.status == Status::Violated) {
          ++t.violated;
          const Graph& g = batch[i].graph;
          std::string text = g.order() <= graph6::kMaxShortOrder ? to_graph6(g) : to_edge_list(g);
          report.violations.push_back({std::move(o), std::move(text), batch[i].line});
        }
      }
    }
    batch.clear();
  };
  while (auto item = corpus.next()) {
    batch.push_back(std::move(*item));
    if (batch.size() == kBatchSize) flush();
  }
  flush();
  report.skipped = corpus.issues();
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

inline Report run_corpus(const CorpusSpec& spec, const std::vector<PropertyId>& properties, std::size_t kmax,
                         std::size_t workers = default_workers(), const PropertyRunner& runner = run_property) {
  if (properties.empty()) throw ArgumentError("run_corpus needs at least one property");
  CorpusStream corpus(spec);
  return run_corpus(corpus, properties, kmax, workers, runner);
}

inline constexpr std::string_view kZeroExtConvention = "0-extendible means connected, at least 2 vertices, and a perfect matching";

inline Json to_json(const CorpusSpec& s) {
  switch (s.mode) {
    case CorpusMode::Exhaustive: return {{"mode", "exhaustive"}, {"n", s.n}};
    case CorpusMode::Random:
      return {{"mode", "random"}, {"n", s.n}, {"count", s.count}, {"seed", s.seed}, {"edge_probability", s.edge_probability}};
    case CorpusMode::External: return {{"mode", "external"}, {"source", s.source}, {"strict", s.strict}};
  }
  return nullptr;
}

inline Json to_json(const PropertyOutcome& o) {
  return {{"property", std::string(to_string(o.property))},
          {"graph_id", o.graph_id},
          {"status", std::string(to_string(o.status))},
          {"detail", o.detail},
          {"payload", o.payload}};
}

/// Report document. Wall time is included only on request so that the
/// default rendering is byte-reproducible.
inline Json to_json(const Report& r, bool include_timing = false) {
  Json props = Json::array();
  Json tallies = Json::object();
  for (PropertyId p : r.properties) {
    props.push_back(std::string(to_string(p)));
    const auto& t = r.tallies.at(p);
    tallies[std::string(to_string(p))] = {{"holds", t.holds}, {"violated", t.violated}, {"inapplicable", t.inapplicable}};
  }
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json j = to_json(v.outcome);
    j["graph"] = v.graph;
    j["line"] = v.line ? Json(*v.line) : Json(nullptr);
    violations.push_back(std::move(j));
  }
  Json skipped = Json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"line", s.line}, {"message", s.message}});
  Json out = {{"tool", "kext"},
              {"version", r.version},
              {"corpus", to_json(r.spec)},
              {"properties", std::move(props)},
              {"kmax", r.kmax},
              {"k0_convention", std::string(kZeroExtConvention)},
              {"graphs", r.graphs},
              {"tallies", std::move(tallies)},
              {"violations", std::move(violations)},
              {"skipped", std::move(skipped)},
              {"clean", r.clean()}};
  if (include_timing) out["wall_time_seconds"] = r.wall_seconds;
  return out;
}

}  // namespace kext
