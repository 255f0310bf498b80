#pragma once

// graph6 (short header only, n <= 62) and plain edge-list text formats.

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kext/graph.hpp"

namespace kext {

/// Malformed input. `offset` is a byte offset (graph6) and `line` a 1-based
/// line number (edge lists, streams); whichever does not apply is absent.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::optional<std::size_t> offset, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(what), offset_(offset), line_(line) {}

  std::optional<std::size_t> offset() const noexcept { return offset_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  std::optional<std::size_t> offset_;
  std::optional<std::size_t> line_;
};

namespace graph6 {
inline constexpr int kBias = 63;
inline constexpr int kMaxByte = 126;
inline constexpr std::size_t kMaxShortOrder = 62;

inline std::size_t data_length(std::size_t n) { return (n * (n - (n > 0 ? 1 : 0)) / 2 + 5) / 6; }
}  // namespace graph6

inline Graph parse_graph6(std::string_view text) {
  using namespace graph6;
  auto fail = [](std::size_t at, const std::string& why) -> ParseError {
    return ParseError("graph6: " + why + " at byte " + std::to_string(at), at);
  };
  if (text.empty()) throw fail(0, "missing size header");
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxByte) throw fail(i, "byte " + std::to_string(c) + " outside 63..126");
  }
  if (static_cast<unsigned char>(text[0]) == kMaxByte) throw fail(0, "long-form size header (n > 62) unsupported");

  const std::size_t n = static_cast<unsigned char>(text[0]) - kBias;
  const std::size_t need = data_length(n);
  if (text.size() - 1 < need) throw fail(text.size(), "truncated adjacency data");
  if (text.size() - 1 > need) throw fail(1 + need, "trailing bytes after adjacency data");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  auto read_bit = [&](std::size_t idx) {
    int group = static_cast<unsigned char>(text[1 + idx / 6]) - kBias;
    return (group >> (5 - idx % 6)) & 1;
  };
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if (read_bit(bit)) edges.emplace_back(i, j);
  for (; bit < need * 6; ++bit)
    if (read_bit(bit)) throw fail(1 + bit / 6, "non-zero padding bit");
  return Graph(n, edges);
}

inline std::string to_graph6(const Graph& g) {
  using namespace graph6;
  const std::size_t n = g.order();
  if (n > kMaxShortOrder) throw UnsupportedError("graph6 encoding supports n <= 62, got n=" + std::to_string(n));
  std::vector<int> groups(data_length(n), 0);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j)) groups[bit / 6] |= 1 << (5 - bit % 6);
  std::string out(1, static_cast<char>(kBias + n));
  for (int group : groups) out.push_back(static_cast<char>(kBias + group));
  return out;
}

/// "n" on the first non-blank line, then one "u v" pair per line.
/// Blank lines are ignored; duplicate edges collapse.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& why) { return ParseError("edge list line " + std::to_string(lineno) + ": " + why, std::nullopt, lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    if (!n) {
      if (!(fields >> a)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw fail("expected vertex count");
      }
      if (a < 0) throw fail("negative vertex count");
      std::string extra;
      if (fields >> extra) throw fail("unexpected token '" + extra + "' after vertex count");
      n = static_cast<std::size_t>(a);
      continue;
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!(fields >> a >> b)) throw fail("expected 'u v'");
    std::string extra;
    if (fields >> extra) throw fail("unexpected token '" + extra + "'");
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= *n || static_cast<std::size_t>(b) >= *n)
      throw fail("vertex id out of range 0.." + std::to_string(*n == 0 ? 0 : *n - 1));
    if (a == b) throw fail("self-loop at " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!n) throw ParseError("edge list: missing vertex count", std::nullopt, lineno);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(*n, edges);
}

/// Canonical edge-list text: "n" then sorted "u v" lines, no trailing newline.
inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order());
  for (const Edge& e : g.edges()) out += "\n" + std::to_string(e.u) + " " + std::to_string(e.v);
  return out;
}

}  // namespace kext
