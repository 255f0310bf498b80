#pragma once

// Subcommand bodies for the `kext` tool. Each takes parsed options and
// explicit streams and returns the process exit status:
//   0  success, no violations
//   1  property violation found (verify only)
//   2  usage or input error

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kext/analysis.hpp"
#include "kext/corpus.hpp"
#include "kext/graph6.hpp"
#include "kext/parallel.hpp"
#include "kext/verifier.hpp"

namespace kext::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Graph6, Edges };

inline std::optional<Format> parse_format(const std::string& s) {
  if (s == "g6" || s == "graph6") return Format::Graph6;
  if (s == "edges") return Format::Edges;
  return std::nullopt;
}

/// Reads every graph from `in`. graph6 input is one graph per non-empty
/// line; edge-list input is a single graph (empty input yields none).
inline std::vector<Graph> read_graphs(std::istream& in, Format fmt) {
  std::vector<Graph> out;
  if (fmt == Format::Edges) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return out;
    out.push_back(parse_edge_list(text));
    return out;
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset(), lineno);
    }
  }
  return out;
}

struct AnalyzeOptions {
  Format format = Format::Graph6;
  std::size_t kmax = kDefaultKmax;
  std::size_t workers = 1;
};

inline int cmd_analyze(const AnalyzeOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<Graph> graphs;
  try {
    graphs = read_graphs(in, opt.format);
  } catch (const ParseError& e) {
    err << "kext analyze: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "kext analyze: " << e.what() << "\n";
    return kExitUsage;
  }
  std::vector<std::string> lines(graphs.size());
  parallel_for(graphs.size(), opt.workers, [&](std::size_t i) { lines[i] = to_json(analyze_graph(graphs[i], opt.kmax)).dump(); });
  for (const auto& l : lines) out << l << "\n";
  return kExitOk;
}

struct VerifyOptions {
  std::optional<std::size_t> exhaustive;
  std::optional<std::vector<std::uint64_t>> random;  // n count seed
  std::optional<std::string> input;
  std::vector<std::string> properties;  // empty: all
  std::size_t kmax = kDefaultKmax;
  bool strict = false;
  std::size_t workers = 1;
  // Test hook: the first graph on which this property holds is reported as
  // a violation, exercising the violation path end to end.
  std::optional<PropertyId> inject_violation;
};

namespace detail {

inline PropertyRunner injecting_runner(PropertyId target) {
  auto fired = std::make_shared<std::atomic<bool>>(false);
  return [target, fired](GraphFacts& f, PropertyId p, std::size_t kmax) {
    auto o = run_property(f, p, kmax);
    if (p == target && o.status == Status::Holds && !fired->exchange(true)) {
      o.status = Status::Violated;
      o.detail = "injected violation (test hook)";
      o.payload = {{"injected", true}};
    }
    return o;
  };
}

}  // namespace detail

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  int modes = (opt.exhaustive ? 1 : 0) + (opt.random ? 1 : 0) + (opt.input ? 1 : 0);
  if (modes != 1) {
    err << "kext verify: exactly one of --exhaustive, --random, --input is required\n";
    return kExitUsage;
  }
  std::vector<PropertyId> props;
  for (const auto& name : opt.properties) {
    auto p = parse_property(name);
    if (!p) {
      err << "kext verify: unknown property '" << name << "' (known: P21 P22 P23 T31 T32 KO MONO-EXT)\n";
      return kExitUsage;
    }
    if (std::find(props.begin(), props.end(), *p) == props.end()) props.push_back(*p);
  }
  if (opt.properties.empty()) props.assign(kAllProperties.begin(), kAllProperties.end());

  CorpusSpec spec;
  if (opt.exhaustive) spec = CorpusSpec::exhaustive(*opt.exhaustive);
  if (opt.random) {
    if (opt.random->size() != 3) {
      err << "kext verify: --random takes n count seed\n";
      return kExitUsage;
    }
    spec = CorpusSpec::random((*opt.random)[0], (*opt.random)[1], (*opt.random)[2]);
  }
  if (opt.input) spec = CorpusSpec::external(*opt.input, opt.strict);

  Report report;
  try {
    PropertyRunner runner = run_property;
    if (opt.inject_violation) runner = detail::injecting_runner(*opt.inject_violation);
    report = run_corpus(spec, props, opt.kmax, opt.workers, runner);
  } catch (const ParseError& e) {
    err << "kext verify: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "kext verify: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "kext verify: " << e.what() << "\n";
    return kExitUsage;
  }
  out << to_json(report).dump(2) << "\n";
  err << "kext verify: " << report.graphs << " graphs, " << report.violations.size() << " violations, wall time "
      << report.wall_seconds << " s\n";
  if (!report.clean()) return kExitViolation;
  if (!report.skipped.empty()) {
    err << "kext verify: skipped " << report.skipped.size() << " malformed line(s)\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct GenOptions {
  std::optional<std::size_t> exhaustive;
  std::optional<std::vector<std::uint64_t>> random;
};

inline int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  if ((opt.exhaustive ? 1 : 0) + (opt.random ? 1 : 0) != 1) {
    err << "kext gen: exactly one of --exhaustive, --random is required\n";
    return kExitUsage;
  }
  try {
    CorpusSpec spec;
    if (opt.exhaustive) spec = CorpusSpec::exhaustive(*opt.exhaustive);
    if (opt.random) {
      if (opt.random->size() != 3) {
        err << "kext gen: --random takes n count seed\n";
        return kExitUsage;
      }
      spec = CorpusSpec::random((*opt.random)[0], (*opt.random)[1], (*opt.random)[2]);
    }
    CorpusStream corpus(spec);
    if (spec.n > graph6::kMaxShortOrder) throw UnsupportedError("graph6 output supports n <= 62");
    while (auto item = corpus.next()) out << to_graph6(item->graph) << "\n";
  } catch (const ArgumentError& e) {
    err << "kext gen: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "kext gen: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct ConvertOptions {
  Format from = Format::Graph6;
  Format to = Format::Edges;
};

/// Edge-list output for several graphs separates them with a blank line.
inline int cmd_convert(const ConvertOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    auto graphs = read_graphs(in, opt.from);
    std::string buffer;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (opt.to == Format::Graph6) {
        buffer += to_graph6(graphs[i]) + "\n";
      } else {
        if (i > 0) buffer += "\n";
        buffer += to_edge_list(graphs[i]) + "\n";
      }
    }
    out << buffer;
  } catch (const ParseError& e) {
    err << "kext convert: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "kext convert: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace kext::cli
