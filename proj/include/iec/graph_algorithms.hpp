#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "iec/graph.hpp"

namespace iec {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// BFS distances from `source`; unreachable vertices get nullopt.
inline std::vector<std::optional<std::size_t>> distances_from(const Graph &g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x))
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

/// Largest shortest-path distance. nullopt stands for infinity (disconnected
/// graph); graphs with at most one vertex have diameter 0.
inline std::optional<std::size_t> diameter(const Graph &g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (const auto &d : distances_from(g, s)) {
      if (!d)
        return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

inline std::vector<std::vector<Vertex>> connected_components(const Graph &g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s])
      continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex y : g.neighbors(comp[head]))
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph &g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

inline bool is_forest(const Graph &g) {
  return g.size() + connected_components(g).size() == g.order();
}

inline bool is_tree(const Graph &g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

/// Connected with exactly one cycle.
inline bool is_unicyclic(const Graph &g) {
  return g.order() >= 3 && g.size() == g.order() && is_connected(g);
}

inline bool is_complete(const Graph &g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

/// Outcome of a 2-coloring attempt: `side` is filled when bipartite,
/// otherwise `odd_cycle` holds the vertices of an odd cycle in order.
struct TwoColoring {
  std::vector<std::uint8_t> side;
  std::vector<std::size_t> odd_cycle;

  bool bipartite() const { return odd_cycle.empty(); }
};

/// BFS 2-coloring of an abstract graph on [0, n). `neighbors(x)` must return
/// an iterable range of neighbor indices. Roots (and so isolated vertices)
/// take side 0.
template <class NeighborFn>
TwoColoring two_color(std::size_t n, NeighborFn &&neighbors) {
  constexpr std::uint8_t unset = 2;
  TwoColoring out;
  out.side.assign(n, unset);
  std::vector<std::size_t> parent(n, std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (out.side[root] != unset)
      continue;
    out.side[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (auto yy : neighbors(x)) {
        auto y = static_cast<std::size_t>(yy);
        if (out.side[y] == unset) {
          out.side[y] = static_cast<std::uint8_t>(1 - out.side[x]);
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (out.side[y] == out.side[x]) {
          // Walk both BFS-tree branches up to their common ancestor.
          std::vector<std::size_t> left{x}, right{y};
          std::size_t a = x, b = y;
          while (depth[a] > depth[b]) {
            a = parent[a];
            left.push_back(a);
          }
          while (depth[b] > depth[a]) {
            b = parent[b];
            right.push_back(b);
          }
          while (a != b) {
            a = parent[a];
            b = parent[b];
            left.push_back(a);
            right.push_back(b);
          }
          right.pop_back();
          out.odd_cycle = std::move(left);
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          out.side.clear();
          return out;
        }
      }
    }
  }
  return out;
}

struct Bipartition {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

struct BipartitionResult {
  std::optional<Bipartition> parts;
  std::vector<Vertex> odd_cycle;
};

inline BipartitionResult bipartition(const Graph &g) {
  auto tc = two_color(g.order(), [&g](std::size_t x) { return g.neighbors(static_cast<Vertex>(x)); });
  BipartitionResult res;
  if (!tc.bipartite()) {
    for (auto v : tc.odd_cycle)
      res.odd_cycle.push_back(static_cast<Vertex>(v));
    return res;
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v)
    (tc.side[v] == 0 ? parts.first : parts.second).push_back(v);
  res.parts = std::move(parts);
  return res;
}

/// G²: uv is an edge iff 1 <= d(u,v) <= 2.
inline Graph square(const Graph &g) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < g.order(); ++u) {
    std::vector<Vertex> reach;
    for (Vertex x : g.neighbors(u)) {
      reach.push_back(x);
      for (Vertex y : g.neighbors(x))
        reach.push_back(y);
    }
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    for (Vertex v : reach)
      if (v > u)
        es.push_back({u, v});
  }
  return Graph::from_edges(g.order(), es);
}

namespace detail {

inline std::vector<Bitset> adjacency_bits(const Graph &g) {
  std::vector<Bitset> adj(g.order(), Bitset(g.order()));
  for (const Edge &e : g.edges()) {
    adj[e.u].set(e.v);
    adj[e.v].set(e.u);
  }
  return adj;
}

// Branch and bound for maximum clique with a greedy-coloring bound on the
// candidate set (MCQ style).
class CliqueSearch {
public:
  explicit CliqueSearch(const std::vector<Bitset> &adj) : adj_(adj) {}

  std::size_t run() {
    best_ = 0;
    if (adj_.empty())
      return 0;
    Bitset all(adj_.size());
    all.set();
    expand(all, 0);
    return best_;
  }

private:
  void expand(Bitset cand, std::size_t size) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    color_sort(cand, order, bound);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (size + bound[k] <= best_)
        return;
      const std::size_t v = order[k];
      Bitset next = cand & adj_[v];
      if (next.none())
        best_ = std::max(best_, size + 1);
      else
        expand(std::move(next), size + 1);
      cand.reset(v);
    }
  }

  void color_sort(const Bitset &cand, std::vector<std::size_t> &order,
                  std::vector<std::size_t> &bound) const {
    Bitset uncolored = cand;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset avail = uncolored;
      for (auto v = avail.find_first(); v != Bitset::npos; v = avail.find_next(v)) {
        avail -= adj_[v];
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  const std::vector<Bitset> &adj_;
  std::size_t best_ = 0;
};

inline void min_independent_dominating(const Graph &g, std::vector<std::uint8_t> &dominated,
                                       std::size_t chosen, std::size_t &best) {
  if (chosen + 1 >= best) {
    // Adding even one vertex cannot improve; only accept if already dominating.
    if (std::find(dominated.begin(), dominated.end(), 0) == dominated.end())
      best = std::min(best, chosen);
    return;
  }
  auto it = std::find(dominated.begin(), dominated.end(), 0);
  if (it == dominated.end()) {
    best = std::min(best, chosen);
    return;
  }
  const auto v = static_cast<Vertex>(it - dominated.begin());
  std::vector<Vertex> options{v};
  for (Vertex u : g.neighbors(v))
    if (!dominated[u])
      options.push_back(u);
  for (Vertex u : options) {
    std::vector<Vertex> newly;
    auto mark = [&](Vertex x) {
      if (!dominated[x]) {
        dominated[x] = 1;
        newly.push_back(x);
      }
    };
    mark(u);
    for (Vertex x : g.neighbors(u))
      mark(x);
    min_independent_dominating(g, dominated, chosen + 1, best);
    for (Vertex x : newly)
      dominated[x] = 0;
  }
}

} // namespace detail

/// Clique number ω(G) by exact branch and bound. 0 for the empty graph.
inline std::size_t max_clique_size(const Graph &g) {
  auto adj = detail::adjacency_bits(g);
  return detail::CliqueSearch(adj).run();
}

/// Independence number α(G), as ω of the complement.
inline std::size_t independence_number(const Graph &g) {
  auto adj = detail::adjacency_bits(g);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    adj[v].flip();
    adj[v].reset(v);
  }
  return detail::CliqueSearch(adj).run();
}

/// Independent domination number i(G): fewest vertices in a maximal
/// independent set.
inline std::size_t independent_domination_number(const Graph &g) {
  std::vector<std::uint8_t> dominated(g.order(), 0);
  std::size_t best = g.order() + 1;
  detail::min_independent_dominating(g, dominated, 0, best);
  return g.order() == 0 ? 0 : best;
}

} // namespace iec
