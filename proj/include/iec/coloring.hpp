#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "iec/graph.hpp"
#include "iec/graph_algorithms.hpp"

namespace iec {

using Color = std::uint32_t;

/// Colors indexed by canonical edge id. Values need not be dense.
class EdgeColoring {
public:
  EdgeColoring() = default;
  explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  std::size_t size() const { return colors_.size(); }
  Color operator[](EdgeId e) const { return colors_.at(e.index); }
  Color &operator[](EdgeId e) { return colors_.at(e.index); }
  const std::vector<Color> &colors() const { return colors_; }

  bool operator==(const EdgeColoring &) const = default;

private:
  std::vector<Color> colors_;
};

inline std::size_t num_colors(const EdgeColoring &c) {
  std::vector<Color> v = c.colors();
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

/// Renumbers colors to 0..k-1 in order of first appearance.
inline EdgeColoring normalized(const EdgeColoring &c) {
  std::vector<Color> seen;
  std::vector<Color> out;
  out.reserve(c.size());
  for (Color x : c.colors()) {
    auto it = std::find(seen.begin(), seen.end(), x);
    if (it == seen.end()) {
      seen.push_back(x);
      it = seen.end() - 1;
    }
    out.push_back(static_cast<Color>(it - seen.begin()));
  }
  return EdgeColoring(std::move(out));
}

/// Three edges first = xy, middle = yz, last = zu (x = u allowed).
struct ConsecutiveTriple {
  EdgeId first;
  EdgeId middle;
  EdgeId last;

  auto operator<=>(const ConsecutiveTriple &) const = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<ConsecutiveTriple> violations;
};

class ColoringMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
inline void require_bound(const Graph &g, const EdgeColoring &c) {
  if (c.size() != g.size())
    throw ColoringMismatch("coloring has " + std::to_string(c.size()) +
                           " entries but the graph has " + std::to_string(g.size()) +
                           " edges");
}
} // namespace detail

/// Checks every consecutive triple of `g` and lists all whose outer edges
/// share a color. Each violation is reported once, with first < last.
inline ValidationReport validate(const Graph &g, const EdgeColoring &c) {
  detail::require_bound(g, c);
  ValidationReport rep;
  for (std::size_t m = 0; m < g.size(); ++m) {
    const Edge &mid = g.edges()[m];
    for (EdgeId a : g.incident(mid.u)) {
      if (a.index == m)
        continue;
      for (EdgeId b : g.incident(mid.v)) {
        if (b.index == m || b == a || c[a] != c[b])
          continue;
        rep.violations.push_back({std::min(a, b), EdgeId(m), std::max(a, b)});
      }
    }
  }
  std::sort(rep.violations.begin(), rep.violations.end());
  rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()),
                       rep.violations.end());
  rep.valid = rep.violations.empty();
  return rep;
}

/// True iff for every color class, each component of the subgraph induced by
/// the class's end-vertices is a star. Edges of other colors between those
/// vertices count.
inline bool star_partition_check(const Graph &g, const EdgeColoring &c) {
  detail::require_bound(g, c);
  std::vector<Color> palette = c.colors();
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

  for (Color col : palette) {
    std::vector<Vertex> ends;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (c[EdgeId(i)] == col) {
        ends.push_back(g.edges()[i].u);
        ends.push_back(g.edges()[i].v);
      }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

    const Graph h = induced_subgraph(g, ends);
    for (const auto &comp : connected_components(h)) {
      std::size_t edges_in = 0, max_deg = 0;
      for (Vertex v : comp) {
        edges_in += h.degree(v);
        max_deg = std::max(max_deg, h.degree(v));
      }
      edges_in /= 2;
      const std::size_t k = comp.size();
      if (edges_in + 1 != k)
        return false;
      if (k > 2 && max_deg != k - 1)
        return false;
    }
  }
  return true;
}

/// Proper edge coloring check: adjacent edges get different colors.
inline bool is_proper_edge_coloring(const Graph &g, const EdgeColoring &c) {
  detail::require_bound(g, c);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (c[inc[i]] == c[inc[j]])
          return false;
  }
  return true;
}

} // namespace iec
