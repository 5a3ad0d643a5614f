#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iec {

using Vertex = std::uint32_t;

/// Index of an edge in a graph's canonical (lexicographically sorted) edge list.
struct EdgeId {
  std::size_t index = 0;

  constexpr EdgeId() = default;
  constexpr explicit EdgeId(std::size_t i) : index(i) {}

  constexpr auto operator<=>(const EdgeId &) const = default;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr auto operator<=>(const Edge &) const = default;

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr bool shares_endpoint(const Edge &o) const {
    return touches(o.u) || touches(o.v);
  }
  /// Endpoint opposite to `x`; `x` must be an endpoint.
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }
};

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph with a canonical edge order.
///
/// Edges are stored with u < v and sorted lexicographically; EdgeId i names
/// the i-th stored pair. Instances are immutable once constructed.
class Graph {
public:
  Graph() = default;

  explicit Graph(std::size_t n) : adjacency_(n), incidence_(n) {}

  /// Builds a graph from an arbitrary list of pairs. Orientation is
  /// normalized; self-loops, duplicates and out-of-range endpoints throw.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (const Edge &e : edges) {
      if (e.u >= n || e.v >= n)
        throw GraphError("edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ") has an endpoint outside [0," +
                         std::to_string(n) + ")");
      if (e.u == e.v)
        throw GraphError("self-loop at vertex " + std::to_string(e.u));
      canon.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(canon.begin(), canon.end());
    auto dup = std::adjacent_find(canon.begin(), canon.end());
    if (dup != canon.end())
      throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," +
                       std::to_string(dup->v) + ")");
    return Graph(n, std::move(canon));
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge &edge(EdgeId id) const { return edges_.at(id.index); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  /// Edge ids incident to `v`, in increasing order.
  std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(v); }

  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto &nb : adjacency_)
      d = std::max(d, nb.size());
    return d;
  }

  bool adjacent(Vertex a, Vertex b) const {
    const auto &nb = adjacency_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    Edge key = a < b ? Edge{a, b} : Edge{b, a};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
      return std::nullopt;
    return EdgeId(static_cast<std::size_t>(it - edges_.begin()));
  }

  bool operator==(const Graph &o) const {
    return order() == o.order() && edges_ == o.edges_;
  }

private:
  Graph(std::size_t n, std::vector<Edge> canon)
      : edges_(std::move(canon)), adjacency_(n), incidence_(n) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge &e = edges_[i];
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
      incidence_[e.u].push_back(EdgeId(i));
      incidence_[e.v].push_back(EdgeId(i));
    }
    for (auto &nb : adjacency_)
      std::sort(nb.begin(), nb.end());
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// 64-bit FNV-1a over order and canonical edge list.
inline std::uint64_t fingerprint(const Graph &g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(g.order());
  for (const Edge &e : g.edges()) {
    mix(e.u);
    mix(e.v);
  }
  return h;
}

/// Graph with the extra edge `e` added; throws if it is already present.
inline Graph with_edge(const Graph &g, Edge e) {
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  es.push_back(e);
  return Graph::from_edges(g.order(), es);
}

/// Spanning subgraph keeping only the edges whose flag is set.
inline Graph edge_subgraph(const Graph &g, const std::vector<bool> &keep) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (keep.at(i))
      es.push_back(g.edges()[i]);
  return Graph::from_edges(g.order(), es);
}

/// Vertex-induced subgraph. `vertices` lists the kept vertices; vertex
/// vertices[k] becomes k in the result.
inline Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> map(g.order(), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k)
    map.at(vertices[k]) = static_cast<std::int64_t>(k);
  std::vector<Edge> es;
  for (const Edge &e : g.edges())
    if (map[e.u] >= 0 && map[e.v] >= 0)
      es.push_back({static_cast<Vertex>(map[e.u]), static_cast<Vertex>(map[e.v])});
  return Graph::from_edges(vertices.size(), es);
}

/// Disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph &a, const Graph &b) {
  std::vector<Edge> es(a.edges().begin(), a.edges().end());
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge &e : b.edges())
    es.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(a.order() + b.order(), es);
}

inline Graph complement(const Graph &g) {
  std::vector<Edge> es;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v))
        es.push_back({u, v});
  return Graph::from_edges(g.order(), es);
}

} // namespace iec
