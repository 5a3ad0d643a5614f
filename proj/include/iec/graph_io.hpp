#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iec/graph.hpp"

namespace iec {

/// Input that cannot be decoded. `line()` is 1-based, or 0 when the format
/// has no line structure (graph6).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(tok) + "'");
  return x;
}

} // namespace detail

/// Reads the edge-list format: a header line "n m" followed by m lines "u v"
/// with 0-based endpoints. Blank lines are skipped.
inline Graph parse_edge_list(std::istream &in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;

  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = detail::split_ws(raw);
    if (toks.empty())
      continue;
    if (toks.size() != 2)
      throw ParseError(line_no, "expected two integers, got " +
                                    std::to_string(toks.size()) + " fields");
    auto a = detail::parse_uint(toks[0], line_no);
    auto b = detail::parse_uint(toks[1], line_no);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      if (n > 0xffffffffULL)
        throw ParseError(line_no, "vertex count too large");
      continue;
    }
    if (edges.size() == m)
      throw ParseError(line_no, "more edge lines than the declared " +
                                    std::to_string(m));
    if (a >= n || b >= n)
      throw ParseError(line_no, "endpoint out of range [0," + std::to_string(n) + ")");
    if (a == b)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    edge_line.push_back(line_no);
  }
  if (!have_header)
    throw ParseError(line_no == 0 ? 1 : line_no, "missing header line 'n m'");
  if (edges.size() != m)
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));

  // Duplicates are reported at the line of the second occurrence.
  std::vector<std::pair<Edge, std::size_t>> keyed;
  keyed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e = edges[i];
    if (e.u > e.v)
      std::swap(e.u, e.v);
    keyed.push_back({e, edge_line[i]});
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i)
    if (keyed[i].first == keyed[i - 1].first)
      throw ParseError(keyed[i].second,
                       "duplicate edge (" + std::to_string(keyed[i].first.u) + "," +
                           std::to_string(keyed[i].first.v) + ")");

  return Graph::from_edges(n, edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

/// Canonical edge-list text; parse_edge_list inverts it exactly.
inline std::string to_edge_list(const Graph &g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge &e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Decodes one graph6 line. The optional ">>graph6<<" header and trailing
/// whitespace are stripped.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header))
    text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty())
    throw ParseError(0, "graph6: empty input");

  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError(0, "graph6: invalid character at offset " + std::to_string(i));
  }

  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > text.size())
      throw ParseError(0, "graph6: truncated order field");
    std::uint64_t x = 0;
    for (std::size_t k = 0; k < count; ++k)
      x = (x << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
    return x;
  };

  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n > 0xffffffffULL)
    throw ParseError(0, "graph6: order too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t groups = (bits + 5) / 6;
  if (text.size() - pos != groups)
    throw ParseError(0, "graph6: expected " + std::to_string(groups) +
                            " adjacency characters, found " +
                            std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      auto c = static_cast<unsigned>(text[pos + k / 6] - 63);
      if (c & (1U << (5 - k % 6)))
        edges.push_back({i, j});
    }
  return Graph::from_edges(n, edges);
}

inline std::string to_graph6(const Graph &g) {
  const std::uint64_t n = g.order();
  std::string out;
  auto put = [&](std::uint64_t x, int count) {
    for (int k = count - 1; k >= 0; --k)
      out.push_back(static_cast<char>(((x >> (6 * k)) & 63U) + 63));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put(n, 6);
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

enum class GraphFormat { edge_list, graph6 };

inline GraphFormat format_from_path(std::string_view path) {
  return path.ends_with(".g6") || path.ends_with(".graph6") ? GraphFormat::graph6
                                                            : GraphFormat::edge_list;
}

inline Graph parse_graph(std::string_view text, GraphFormat fmt) {
  if (fmt == GraphFormat::edge_list)
    return parse_edge_list(text);
  // First non-empty line only.
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(start, end - start);
    if (!detail::split_ws(line).empty())
      return parse_graph6(line);
    start = end + 1;
  }
  throw ParseError(0, "graph6: empty input");
}

} // namespace iec
