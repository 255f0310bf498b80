#pragma once

// Graph corpora: every labeled graph on n <= 7 vertices, seeded G(n, p)
// samples, or an external graph6 stream.
//
// Random contract (fixed across releases): a single std::mt19937_64 seeded
// with the 64-bit seed produces all graphs in sequence. For each graph the
// vertex pairs are visited in graph6 column order (0,1), (0,2), (1,2), (0,3),
// ...; each pair draws one 64-bit word x and the edge is present iff
// (x >> 11) * 2^-53 < p.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kext/graph.hpp"
#include "kext/graph6.hpp"

namespace kext {

enum class CorpusMode { Exhaustive, Random, External };

inline constexpr std::size_t kMaxExhaustiveOrder = 7;

struct CorpusSpec {
  CorpusMode mode = CorpusMode::Exhaustive;
  std::size_t n = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  double edge_probability = 0.5;
  std::string source;
  bool strict = false;

  static CorpusSpec exhaustive(std::size_t n) {
    CorpusSpec s;
    s.n = n;
    return s;
  }
  static CorpusSpec random(std::size_t n, std::size_t count, std::uint64_t seed, double p = 0.5) {
    CorpusSpec s;
    s.mode = CorpusMode::Random;
    s.n = n;
    s.count = count;
    s.seed = seed;
    s.edge_probability = p;
    return s;
  }
  static CorpusSpec external(std::string path, bool strict = false) {
    CorpusSpec s;
    s.mode = CorpusMode::External;
    s.source = std::move(path);
    s.strict = strict;
    return s;
  }
};

inline void validate(const CorpusSpec& spec) {
  switch (spec.mode) {
    case CorpusMode::Exhaustive:
      if (spec.n > kMaxExhaustiveOrder)
        throw ArgumentError("exhaustive corpora are limited to n <= 7, got n=" + std::to_string(spec.n));
      break;
    case CorpusMode::Random:
      if (spec.count < 1) throw ArgumentError("random corpus needs count >= 1");
      if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0))
        throw ArgumentError("edge probability must lie in [0, 1]");
      break;
    case CorpusMode::External:
      if (spec.source.empty()) throw ArgumentError("external corpus needs a source path");
      break;
  }
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> es;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (unit_draw(rng) < p) es.emplace_back(i, j);
  return Graph(n, es);
}

/// Random bipartite graph with X = {0..nx-1}, Y = {nx..nx+ny-1}; pairs are
/// drawn for x ascending, then y ascending.
inline Graph random_bipartite(std::size_t nx, std::size_t ny, double p, std::mt19937_64& rng) {
  std::vector<Edge> es;
  for (Vertex x = 0; x < nx; ++x)
    for (Vertex y = 0; y < ny; ++y)
      if (unit_draw(rng) < p) es.emplace_back(x, static_cast<Vertex>(nx + y));
  return Graph(nx + ny, es);
}

struct CorpusItem {
  std::size_t index = 0;
  Graph graph;
  std::optional<std::size_t> line;  // external corpora only
};

/// A skipped malformed line of an external corpus.
struct CorpusIssue {
  std::size_t line = 0;
  std::string message;
};

/// Single-consumer pull stream over a corpus.
class CorpusStream {
 public:
  explicit CorpusStream(CorpusSpec spec) : spec_(std::move(spec)), rng_(spec_.seed) {
    validate(spec_);
    if (spec_.mode == CorpusMode::Exhaustive) {
      pairs_ = spec_.n * (spec_.n - (spec_.n > 0 ? 1 : 0)) / 2;
      total_ = std::uint64_t{1} << pairs_;
    } else if (spec_.mode == CorpusMode::External) {
      auto file = std::make_unique<std::ifstream>(spec_.source);
      if (!*file) throw std::runtime_error("cannot read corpus source '" + spec_.source + "'");
      owned_ = std::move(file);
      input_ = owned_.get();
    }
  }

  /// External corpus read from an already open stream.
  CorpusStream(CorpusSpec spec, std::istream& in) : spec_(std::move(spec)), input_(&in) {}

  std::optional<CorpusItem> next() {
    switch (spec_.mode) {
      case CorpusMode::Exhaustive: return next_exhaustive();
      case CorpusMode::Random: return next_random();
      case CorpusMode::External: return next_external();
    }
    return std::nullopt;
  }

  const std::vector<CorpusIssue>& issues() const noexcept { return issues_; }
  const CorpusSpec& spec() const noexcept { return spec_; }

 private:
  // Graph number i has pair number b (graph6 order) present iff bit
  // (pairs - 1 - b) of i is set, so the stream is lexicographic in the
  // adjacency bit string.
  std::optional<CorpusItem> next_exhaustive() {
    if (produced_ >= total_) return std::nullopt;
    std::uint64_t code = produced_;
    std::vector<Edge> es;
    std::size_t b = 0;
    for (Vertex j = 1; j < spec_.n; ++j)
      for (Vertex i = 0; i < j; ++i, ++b)
        if ((code >> (pairs_ - 1 - b)) & 1U) es.emplace_back(i, j);
    return CorpusItem{produced_++, Graph(spec_.n, es), std::nullopt};
  }

  std::optional<CorpusItem> next_random() {
    if (produced_ >= spec_.count) return std::nullopt;
    return CorpusItem{produced_++, random_graph(spec_.n, spec_.edge_probability, rng_), std::nullopt};
  }

  std::optional<CorpusItem> next_external() {
    std::string text;
    while (std::getline(*input_, text)) {
      ++line_;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      if (text.empty()) continue;
      try {
        return CorpusItem{produced_++, parse_graph6(text), line_};
      } catch (const ParseError& e) {
        if (spec_.strict) throw ParseError("line " + std::to_string(line_) + ": " + e.what(), e.offset(), line_);
        issues_.push_back({line_, e.what()});
      } catch (const UnsupportedError& e) {
        if (spec_.strict) throw ParseError("line " + std::to_string(line_) + ": " + e.what(), std::nullopt, line_);
        issues_.push_back({line_, e.what()});
      }
    }
    return std::nullopt;
  }

  CorpusSpec spec_;
  std::mt19937_64 rng_;
  std::size_t pairs_ = 0;
  std::uint64_t total_ = 0;
  std::uint64_t produced_ = 0;
  std::unique_ptr<std::istream> owned_;
  std::istream* input_ = nullptr;
  std::size_t line_ = 0;
  std::vector<CorpusIssue> issues_;
};

}  // namespace kext
