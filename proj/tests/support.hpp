#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "iec/iec.hpp"

namespace iec::testing {

inline std::string data_path(const std::string &name) { return std::string(IEC_TEST_DATA) + "/" + name; }

/// All connected graphs on 1..7 vertices, one per isomorphism class.
inline const std::vector<Graph> &connected_corpus() {
  static const std::vector<Graph> corpus = [] {
    std::vector<Graph> out;
    std::ifstream f(data_path("connected_upto7.g6"));
    std::string line;
    while (std::getline(f, line))
      if (!line.empty())
        out.push_back(parse_graph6(line));
    return out;
  }();
  return corpus;
}

inline std::vector<Graph> corpus_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (const Graph &g : connected_corpus())
    if (g.order() <= n)
      out.push_back(g);
  return out;
}

/// Uniform graph with n vertices and m edges (m clamped to n choose 2).
inline Graph random_graph(std::mt19937_64 &rng, std::size_t n, std::size_t m) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(m, all.size()));
  return Graph::from_edges(n, all);
}

inline Graph random_connected_graph(std::mt19937_64 &rng, std::size_t n, std::size_t extra) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v)
    es.push_back({static_cast<Vertex>(std::uniform_int_distribution<Vertex>(0, v - 1)(rng)), v});
  Graph g = Graph::from_edges(n, es);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (std::size_t tries = 0; tries < 20 * extra && g.size() < n - 1 + extra; ++tries) {
    Vertex a = pick(rng), b = pick(rng);
    if (a != b && !g.adjacent(a, b))
      g = with_edge(g, {a, b});
  }
  return g;
}

/// Uniform labeled tree via a random Pruefer sequence.
inline Graph random_tree(std::mt19937_64 &rng, std::size_t n) {
  if (n <= 2)
    return n == 2 ? Graph::from_edges(2, {{0, 1}}) : Graph(n);
  std::vector<Vertex> seq(n - 2);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (auto &x : seq)
    x = pick(rng);
  std::vector<std::size_t> deg(n, 1);
  for (Vertex x : seq)
    ++deg[x];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1)
      leaves.insert(v);
  std::vector<Edge> es;
  for (Vertex x : seq) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    es.push_back({leaf, x});
    if (--deg[x] == 1)
      leaves.insert(x);
  }
  es.push_back({*leaves.begin(), *std::next(leaves.begin())});
  return Graph::from_edges(n, es);
}

// Definition-level oracles: no conflict graph, no shared code with the library.

/// e1, e2, e3 consecutive in this order: e1 = xy, e2 = yz, e3 = zu (x = u allowed).
inline bool consecutive(const Edge &e1, const Edge &e2, const Edge &e3) {
  if (e1 == e2 || e2 == e3 || e1 == e3)
    return false;
  for (auto [y, z] : {std::pair{e2.u, e2.v}, std::pair{e2.v, e2.u}}) {
    const bool e1_at_y = e1.u == y || e1.v == y;
    const bool e3_at_z = e3.u == z || e3.v == z;
    if (e1_at_y && e3_at_z && !(e1.u == z || e1.v == z) && !(e3.u == y || e3.v == y))
      return true;
  }
  return false;
}

inline bool oracle_valid(const Graph &g, const std::vector<Color> &c) {
  const auto es = g.edges();
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = 0; b < es.size(); ++b)
      for (std::size_t d = 0; d < es.size(); ++d)
        if (c[a] == c[d] && consecutive(es[a], es[b], es[d]))
          return false;
  return true;
}

inline std::vector<Color> random_coloring(std::mt19937_64 &rng, std::size_t m, Color k) {
  std::vector<Color> c(m);
  std::uniform_int_distribution<Color> pick(0, k - 1);
  for (auto &x : c)
    x = pick(rng);
  return c;
}

inline std::size_t solve_value(const Graph &g) {
  const SolveResult r = injective_chromatic_index(g);
  if (r.timed_out)
    throw std::runtime_error("unexpected timeout");
  return r.value;
}

inline bool is_path_graph(const Graph &g) {
  if (!is_connected(g) || g.size() + 1 != g.order())
    return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2)
      return false;
  return true;
}

} // namespace iec::testing
