#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iec/graph.hpp"
#include "iec/graph_algorithms.hpp"

namespace iec {

/// Auxiliary graph on the edges of a source graph: edge ids x and y are
/// adjacent iff some third edge e makes x, e, y consecutive. Proper vertex
/// colorings of it are exactly the injective edge colorings of the source.
class ConflictGraph {
public:
  ConflictGraph() = default;

  explicit ConflictGraph(const Graph &g)
      : adj_(g.size(), Bitset(g.size())), source_fingerprint_(fingerprint(g)) {
    // Middle edge yz: every other edge at y conflicts with every other edge at z.
    for (std::size_t mid = 0; mid < g.size(); ++mid) {
      const Edge &e = g.edges()[mid];
      for (EdgeId a : g.incident(e.u)) {
        if (a.index == mid)
          continue;
        for (EdgeId b : g.incident(e.v)) {
          if (b.index == mid || b == a)
            continue;
          adj_[a.index].set(b.index);
          adj_[b.index].set(a.index);
        }
      }
    }
    neighbors_.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      for (auto j = adj_[i].find_first(); j != Bitset::npos; j = adj_[i].find_next(j))
        neighbors_[i].push_back(j);
  }

  std::size_t order() const { return adj_.size(); }

  std::size_t size() const {
    std::size_t twice = 0;
    for (const auto &row : adj_)
      twice += row.count();
    return twice / 2;
  }

  bool conflicting(EdgeId a, EdgeId b) const { return adj_.at(a.index).test(b.index); }

  const Bitset &row(std::size_t i) const { return adj_.at(i); }
  const std::vector<std::size_t> &neighbors(std::size_t i) const { return neighbors_.at(i); }
  std::size_t degree(std::size_t i) const { return neighbors_.at(i).size(); }

  std::uint64_t source_fingerprint() const { return source_fingerprint_; }

  /// The conflict graph as an ordinary Graph (vertex i = EdgeId i).
  Graph to_graph() const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j : neighbors_[i])
        if (j > i)
          es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph::from_edges(order(), es);
  }

private:
  std::vector<Bitset> adj_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::uint64_t source_fingerprint_ = 0;
};

inline ConflictGraph build_conflict_graph(const Graph &g) { return ConflictGraph(g); }

struct ConflictBipartiteness {
  bool bipartite = true;
  /// Side (0/1) per edge id when bipartite.
  std::vector<std::uint8_t> side;
  /// Edge ids of an odd cycle of the conflict graph when not bipartite.
  std::vector<EdgeId> odd_cycle;
};

inline ConflictBipartiteness is_bipartite_conflict(const ConflictGraph &cg) {
  auto tc = two_color(cg.order(), [&cg](std::size_t x) { return cg.neighbors(x); });
  ConflictBipartiteness out;
  out.bipartite = tc.bipartite();
  out.side = std::move(tc.side);
  for (auto i : tc.odd_cycle)
    out.odd_cycle.emplace_back(i);
  return out;
}

/// Greedy clique over bitset adjacency rows: from each start vertex,
/// repeatedly add the candidate with most neighbors among the remaining
/// candidates; keeps the largest clique found.
inline std::vector<std::size_t> greedy_clique(const std::vector<Bitset> &rows) {
  std::vector<std::size_t> best;
  for (std::size_t start = 0; start < rows.size(); ++start) {
    std::vector<std::size_t> clique{start};
    Bitset cand = rows[start];
    while (cand.any()) {
      std::size_t pick = cand.find_first(), pick_deg = 0;
      for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
        const std::size_t d = (cand & rows[v]).count();
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      clique.push_back(pick);
      cand &= rows[pick];
    }
    if (clique.size() > best.size())
      best = std::move(clique);
  }
  return best;
}

inline std::vector<std::size_t> greedy_conflict_clique(const ConflictGraph &cg) {
  std::vector<Bitset> rows;
  rows.reserve(cg.order());
  for (std::size_t i = 0; i < cg.order(); ++i)
    rows.push_back(cg.row(i));
  return greedy_clique(rows);
}

} // namespace iec
