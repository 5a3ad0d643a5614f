#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "iec/coloring.hpp"
#include "iec/graph.hpp"
#include "iec/graph_algorithms.hpp"

namespace iec {

namespace family {

struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Complete { std::size_t n; };
struct CompleteBipartite { std::size_t p, q; };
struct Star { std::size_t q; };
/// W_n: a hub joined to every vertex of C_{n-1}.
struct Wheel { std::size_t n; };
struct Petersen {};
/// p triangles sharing one vertex.
struct Friendship { std::size_t p; };
/// K_p with the center of a star K_{1,q_j} identified with vertex j.
struct Coalesced { std::vector<std::size_t> stars; };
/// K_p with one pendant edge per vertex.
struct CoronaComplete { std::size_t p; };
/// Triangle 0,1,2 plus extra vertices; extra vertex i (id 3+i) hangs from
/// parents[i], which must be smaller than 3+i.
struct UnicyclicTriangle { std::vector<Vertex> parents; };
/// Cycle 0..cycle_len-1 plus extra vertices, same parent convention.
struct Unicyclic { std::size_t cycle_len; std::vector<Vertex> parents; };
/// P_n □ K_2.
struct Ladder { std::size_t n; };
/// P_r □ P_s.
struct Grid { std::size_t r, s; };
/// Brick-wall hexagonal patch: `cols` vertical strips, each `rows` cells tall.
struct Honeycomb { std::size_t rows, cols; };
struct PerfectBinaryTree { std::size_t height; };
/// Path on 6 vertices with one extra leaf on each of its two middle vertices.
struct TreeTPrime {};
/// C_4 where every cycle vertex carries a leaf and a pendant path of length 2.
struct Aleph {};
/// The 9-vertex, 11-edge reduction gadget.
struct GadgetB {};

} // namespace family

using FamilySpec =
    std::variant<family::Path, family::Cycle, family::Complete, family::CompleteBipartite,
                 family::Star, family::Wheel, family::Petersen, family::Friendship,
                 family::Coalesced, family::CoronaComplete, family::UnicyclicTriangle,
                 family::Unicyclic, family::Ladder, family::Grid, family::Honeycomb,
                 family::PerfectBinaryTree, family::TreeTPrime, family::Aleph, family::GadgetB>;

class FamilyError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Vertex roles inside gadget B.
struct GadgetLayout {
  static constexpr Vertex u = 0, b = 1, v = 2;
  static constexpr Vertex w1 = 3, w2 = 4, x1 = 5, x2 = 6, y1 = 7, y2 = 8;
  static constexpr std::size_t order = 9;
  static constexpr std::size_t size = 11;
};

/// Proven value of χ′ᵢ for a family member: exact when lo == hi.
struct FormulaValue {
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool exact() const { return lo == hi; }
  bool operator==(const FormulaValue &) const = default;
};

struct FamilyAnswer {
  Graph graph;
  EdgeColoring coloring;
  /// Empty when no proven formula covers the parameters.
  std::optional<FormulaValue> claimed;
};

namespace detail {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

inline void require(bool ok, const std::string &msg) {
  if (!ok)
    throw FamilyError(msg);
}

// Builds a Graph and a coloring together: edges are added with colors and
// mapped onto canonical order at the end.
class ColoredBuilder {
public:
  explicit ColoredBuilder(std::size_t n) : n_(n) {}

  void add(Vertex a, Vertex b, Color c = 0) { pending_.push_back({{a, b}, c}); }

  std::size_t order() const { return n_; }

  Graph graph() const {
    std::vector<Edge> es;
    for (const auto &p : pending_)
      es.push_back(p.first);
    return Graph::from_edges(n_, es);
  }

  EdgeColoring coloring(const Graph &g) const {
    std::vector<Color> cols(g.size(), 0);
    for (const auto &[e, c] : pending_)
      cols[g.edge_id(e.u, e.v)->index] = c;
    return EdgeColoring(std::move(cols));
  }

private:
  std::size_t n_;
  std::vector<std::pair<Edge, Color>> pending_;
};

/// Injective coloring of the cycle a_0..a_{n-1} (a_i = v_i v_{i+1}). Edges two
/// apart along the cycle conflict, so color the "step 2" cycles properly:
/// blocks 0,0,1,1,... with color 2 patching odd wrap-arounds.
inline std::vector<Color> cycle_edge_colors(std::size_t n) {
  std::vector<Color> col(n, 0);
  if (n % 2 == 1) {
    for (std::size_t t = 0; t < n; ++t)
      col[(2 * t) % n] = t + 1 == n ? 2 : static_cast<Color>(t % 2);
    return col;
  }
  const std::size_t half = n / 2;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t t = 0; t < half; ++t)
      col[r + 2 * t] = (half % 2 == 1 && t + 1 == half) ? 2 : static_cast<Color>(t % 2);
  return col;
}

/// Depth-mod-3 coloring of a forest: the edge from a vertex at depth d to its
/// child gets (offset + d) mod 3. `roots` pairs each component root with its
/// offset; components without a listed root are rooted at their lowest vertex.
inline void color_forest_by_depth(const Graph &forest, std::vector<Color> &out,
                                  const std::vector<std::pair<Vertex, Color>> &roots,
                                  const std::vector<bool> &skip_vertex = {}) {
  std::vector<bool> seen(forest.order(), false);
  auto skipped = [&](Vertex v) { return !skip_vertex.empty() && skip_vertex[v]; };
  auto bfs = [&](Vertex root, Color offset) {
    std::vector<std::pair<Vertex, std::size_t>> queue{{root, 0}};
    seen[root] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      auto [x, d] = queue[h];
      for (Vertex y : forest.neighbors(x)) {
        if (seen[y] || skipped(y))
          continue;
        seen[y] = true;
        out[forest.edge_id(x, y)->index] = static_cast<Color>((offset + d) % 3);
        queue.push_back({y, d + 1});
      }
    }
  };
  for (auto [r, off] : roots)
    if (!seen[r])
      bfs(r, off);
  for (Vertex v = 0; v < forest.order(); ++v)
    if (!seen[v] && !skipped(v))
      bfs(v, 0);
}

inline Graph attach_parents(std::size_t base, std::vector<Edge> edges,
                            const std::vector<Vertex> &parents) {
  for (std::size_t i = 0; i < parents.size(); ++i) {
    require(parents[i] < base + i, "parent of extra vertex " + std::to_string(base + i) +
                                       " must be an earlier vertex");
    edges.push_back({parents[i], static_cast<Vertex>(base + i)});
  }
  return Graph::from_edges(base + parents.size(), edges);
}

inline std::vector<Edge> cycle_edges(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    es.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return es;
}

// Honeycomb cell geometry: strip a lies between columns a and a+1; its rungs
// sit on rows of the same parity as a.
inline std::map<std::pair<std::size_t, std::size_t>, Vertex>
honeycomb_vertices(const family::Honeycomb &h, std::vector<std::pair<Edge, Color>> &edges) {
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>>
      coord_edges;
  for (std::size_t a = 0; a < h.cols; ++a)
    for (std::size_t b = 0; b < h.rows; ++b) {
      const std::size_t k0 = 2 * b + a % 2;
      for (std::size_t j : {a, a + 1})
        for (std::size_t k = k0; k < k0 + 2; ++k)
          coord_edges.push_back({{j, k}, {j, k + 1}});
      coord_edges.push_back({{a, k0}, {a + 1, k0}});
      coord_edges.push_back({{a, k0 + 2}, {a + 1, k0 + 2}});
    }
  std::map<std::pair<std::size_t, std::size_t>, Vertex> id;
  for (const auto &[p, q] : coord_edges) {
    id.emplace(p, 0);
    id.emplace(q, 0);
  }
  Vertex next = 0;
  for (auto &kv : id)
    kv.second = next++;
  // Every edge has exactly one endpoint with j+k even; that endpoint's
  // color is (k/2 + 2*(j mod 2)) mod 3.
  std::sort(coord_edges.begin(), coord_edges.end());
  coord_edges.erase(std::unique(coord_edges.begin(), coord_edges.end()), coord_edges.end());
  for (const auto &[p, q] : coord_edges) {
    const auto &marked = (p.first + p.second) % 2 == 0 ? p : q;
    const auto c = static_cast<Color>((marked.second / 2 + 2 * (marked.first % 2)) % 3);
    edges.push_back({{id[p], id[q]}, c});
  }
  return id;
}

inline ColoredBuilder build(const FamilySpec &spec) {
  using namespace family;
  return std::visit(
      overloaded{
          [](const Path &s) {
            require(s.n >= 1, "path needs n >= 1");
            ColoredBuilder b(s.n);
            for (std::size_t i = 0; i + 1 < s.n; ++i)
              b.add(i, i + 1, (i / 2) % 2);
            return b;
          },
          [](const Cycle &s) {
            require(s.n >= 3, "cycle needs n >= 3");
            ColoredBuilder b(s.n);
            auto col = cycle_edge_colors(s.n);
            auto es = cycle_edges(s.n);
            for (std::size_t i = 0; i < s.n; ++i)
              b.add(es[i].u, es[i].v, col[i]);
            return b;
          },
          [](const Complete &s) {
            require(s.n >= 1, "complete graph needs n >= 1");
            ColoredBuilder b(s.n);
            Color c = 0;
            for (Vertex u = 0; u < s.n; ++u)
              for (Vertex v = u + 1; v < s.n; ++v)
                b.add(u, v, c++);
            return b;
          },
          [](const CompleteBipartite &s) {
            require(s.p >= 1 && s.q >= 1, "complete bipartite graph needs p, q >= 1");
            ColoredBuilder b(s.p + s.q);
            for (std::size_t i = 0; i < s.p; ++i)
              for (std::size_t j = 0; j < s.q; ++j)
                b.add(i, s.p + j, static_cast<Color>(s.p <= s.q ? i : j));
            return b;
          },
          [](const Star &s) {
            require(s.q >= 1, "star needs q >= 1");
            ColoredBuilder b(s.q + 1);
            for (std::size_t i = 1; i <= s.q; ++i)
              b.add(0, i, 0);
            return b;
          },
          [](const Wheel &s) {
            require(s.n >= 4, "wheel needs n >= 4");
            // Spokes conflict only with neighboring spokes; every rim edge
            // conflicts with every spoke; rim edges conflict as in a cycle.
            const std::size_t k = s.n - 1;
            ColoredBuilder b(s.n);
            const Color spoke_colors = k % 2 == 0 ? 2 : 3;
            for (std::size_t i = 0; i < k; ++i)
              b.add(0, i + 1, (k % 2 == 1 && i + 1 == k) ? 2 : static_cast<Color>(i % 2));
            auto rim = cycle_edge_colors(k);
            for (std::size_t i = 0; i < k; ++i)
              b.add(i + 1, (i + 1) % k + 1, spoke_colors + rim[i]);
            return b;
          },
          [](const Petersen &) {
            // Outer 0..4, inner 5..9 (inner i joined to inner i+2).
            ColoredBuilder b(10);
            const Color outer[5] = {0, 1, 2, 3, 4};
            const Color spoke[5] = {2, 3, 4, 0, 1};
            for (Vertex i = 0; i < 5; ++i) {
              b.add(i, (i + 1) % 5, outer[i]);
              b.add(i, 5 + i, spoke[i]);
            }
            b.add(5, 7, 3);
            b.add(7, 9, 0);
            b.add(9, 6, 2);
            b.add(6, 8, 4);
            b.add(8, 5, 1);
            return b;
          },
          [](const Friendship &s) {
            require(s.p >= 1, "friendship graph needs p >= 1");
            ColoredBuilder b(2 * s.p + 1);
            for (std::size_t j = 0; j < s.p; ++j) {
              const auto a = static_cast<Vertex>(1 + 2 * j), c = static_cast<Vertex>(2 + 2 * j);
              b.add(0, a, 0);
              b.add(0, c, 1);
              b.add(a, c, 2);
            }
            return b;
          },
          [](const Coalesced &s) {
            const std::size_t p = s.stars.size();
            require(p >= 3, "coalesced graph needs p >= 3");
            std::size_t n = p;
            for (auto q : s.stars) {
              require(q >= 1, "star sizes must be >= 1");
              n += q;
            }
            ColoredBuilder b(n);
            // Hamiltonian cycle 0..p-1 gets colors 0..p-1; star j reuses color j.
            Color next = static_cast<Color>(p);
            for (Vertex u = 0; u < p; ++u)
              for (Vertex v = u + 1; v < p; ++v) {
                if (v == u + 1)
                  b.add(u, v, u);
                else if (u == 0 && v + 1 == p)
                  b.add(u, v, static_cast<Color>(p - 1));
                else
                  b.add(u, v, next++);
              }
            Vertex leaf = static_cast<Vertex>(p);
            for (std::size_t j = 0; j < p; ++j)
              for (std::size_t t = 0; t < s.stars[j]; ++t)
                b.add(static_cast<Vertex>(j), leaf++, static_cast<Color>(j));
            return b;
          },
          [](const CoronaComplete &s) {
            return build(family::Coalesced{std::vector<std::size_t>(s.p, 1)});
          },
          [](const UnicyclicTriangle &s) {
            return build(family::Unicyclic{3, s.parents});
          },
          [](const Unicyclic &s) {
            require(s.cycle_len >= 3, "unicyclic graph needs a cycle of length >= 3");
            const Graph g = attach_parents(s.cycle_len, cycle_edges(s.cycle_len), s.parents);
            std::vector<Color> col(g.size(), 0);
            if (s.cycle_len == 3) {
              // Triangle edges 01,12,20 get 0,1,2; the tree hanging at
              // triangle vertex r is layered starting from color r.
              col[g.edge_id(0, 1)->index] = 0;
              col[g.edge_id(1, 2)->index] = 1;
              col[g.edge_id(0, 2)->index] = 2;
              std::vector<bool> skip(g.order(), false);
              std::vector<Edge> tree_edges;
              for (const Edge &e : g.edges())
                if (!(e.u < 3 && e.v < 3))
                  tree_edges.push_back(e);
              const Graph forest = Graph::from_edges(g.order(), tree_edges);
              std::vector<Color> fc(forest.size(), 0);
              color_forest_by_depth(forest, fc, {{0, 0}, {1, 1}, {2, 2}});
              for (std::size_t i = 0; i < forest.size(); ++i)
                col[g.edge_id(forest.edges()[i].u, forest.edges()[i].v)->index] = fc[i];
            } else {
              // Remove cycle vertex 0, layer the remaining forest with three
              // colors, give every edge at vertex 0 a fourth color.
              std::vector<Edge> rest;
              for (const Edge &e : g.edges())
                if (!e.touches(0))
                  rest.push_back(e);
              const Graph forest = Graph::from_edges(g.order(), rest);
              std::vector<Color> fc(forest.size(), 0);
              std::vector<bool> skip(g.order(), false);
              skip[0] = true;
              color_forest_by_depth(forest, fc, {}, skip);
              for (std::size_t i = 0; i < forest.size(); ++i)
                col[g.edge_id(forest.edges()[i].u, forest.edges()[i].v)->index] = fc[i];
              for (EdgeId e : g.incident(0))
                col[e.index] = 3;
            }
            ColoredBuilder b(g.order());
            for (std::size_t i = 0; i < g.size(); ++i)
              b.add(g.edges()[i].u, g.edges()[i].v, col[i]);
            return b;
          },
          [](const Ladder &s) {
            require(s.n >= 1, "ladder needs n >= 1");
            // Column k marks its top vertex (k even) or bottom vertex (k odd)
            // with label k mod 3; each edge has exactly one marked endpoint.
            ColoredBuilder b(2 * s.n);
            auto top = [](std::size_t k) { return static_cast<Vertex>(k); };
            auto bottom = [&s](std::size_t k) { return static_cast<Vertex>(s.n + k); };
            auto label = [](std::size_t k) { return static_cast<Color>(k % 3); };
            for (std::size_t k = 0; k < s.n; ++k) {
              b.add(top(k), bottom(k), label(k));
              if (k + 1 < s.n) {
                const std::size_t top_mark = k % 2 == 0 ? k : k + 1;
                const std::size_t bottom_mark = k % 2 == 1 ? k : k + 1;
                b.add(top(k), top(k + 1), label(top_mark));
                b.add(bottom(k), bottom(k + 1), label(bottom_mark));
              }
            }
            return b;
          },
          [](const Grid &s) {
            require(s.r >= 1 && s.s >= 1, "grid needs r, s >= 1");
            // Edge color = color of its endpoint (i,j) with i+j even:
            // 2*(i mod 2) + (i/2 + j/2) mod 2, i.e. diagonals alternate
            // between two colors, parallel diagonals use the other two.
            ColoredBuilder b(s.r * s.s);
            auto id = [&s](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * s.s + j); };
            auto color_at = [](std::size_t i, std::size_t j) {
              if ((i + j) % 2 == 1)
                return std::optional<Color>{};
              return std::optional<Color>(static_cast<Color>(2 * (i % 2) + (i / 2 + j / 2) % 2));
            };
            auto add = [&](std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) {
              auto c = color_at(i1, j1);
              b.add(id(i1, j1), id(i2, j2), c ? *c : *color_at(i2, j2));
            };
            for (std::size_t i = 0; i < s.r; ++i)
              for (std::size_t j = 0; j < s.s; ++j) {
                if (i + 1 < s.r)
                  add(i, j, i + 1, j);
                if (j + 1 < s.s)
                  add(i, j, i, j + 1);
              }
            return b;
          },
          [](const Honeycomb &s) {
            require(s.rows >= 1 && s.cols >= 1, "honeycomb needs rows, cols >= 1");
            std::vector<std::pair<Edge, Color>> edges;
            auto ids = honeycomb_vertices(s, edges);
            ColoredBuilder b(ids.size());
            for (const auto &[e, c] : edges)
              b.add(e.u, e.v, c);
            return b;
          },
          [](const PerfectBinaryTree &s) {
            require(s.height <= 20, "perfect binary tree height must be <= 20");
            const std::size_t n = (std::size_t{1} << (s.height + 1)) - 1;
            ColoredBuilder b(n);
            std::size_t depth = 0;
            for (std::size_t v = 1; v < n; ++v) {
              while (((std::size_t{1} << (depth + 1)) - 1) <= v)
                ++depth;
              // v sits at `depth`; its parent edge is layered at depth-1.
              b.add(static_cast<Vertex>((v - 1) / 2), static_cast<Vertex>(v),
                    static_cast<Color>((depth - 1) % 3));
            }
            return b;
          },
          [](const TreeTPrime &) {
            ColoredBuilder b(8);
            // Layered from vertex 0: depths 0..4 along the path.
            const Color path_col[5] = {0, 1, 2, 0, 1};
            for (Vertex i = 0; i < 5; ++i)
              b.add(i, i + 1, path_col[i]);
            b.add(2, 6, 2);
            b.add(3, 7, 0);
            return b;
          },
          [](const Aleph &) {
            family::Unicyclic u{4, {0, 1, 2, 3, 0, 1, 2, 3, 8, 9, 10, 11}};
            return build(u);
          },
          [](const GadgetB &) {
            using L = GadgetLayout;
            ColoredBuilder b(L::order);
            b.add(L::u, L::b, 0);
            b.add(L::b, L::v, 0);
            b.add(L::b, L::w1, 0);
            b.add(L::b, L::w2, 0);
            b.add(L::w1, L::x1, 1);
            b.add(L::w2, L::x1, 1);
            b.add(L::x1, L::y1, 1);
            b.add(L::w1, L::x2, 2);
            b.add(L::w2, L::x2, 2);
            b.add(L::x2, L::y2, 2);
            b.add(L::y1, L::y2, 0);
            return b;
          },
      },
      spec);
}

} // namespace detail

inline Graph generate(const FamilySpec &spec) { return detail::build(spec).graph(); }

/// χ′ᵢ as given by a proven closed form, or nullopt when the parameters fall
/// outside every statement that applies to the family.
inline std::optional<FormulaValue> formula_value(const FamilySpec &spec) {
  using namespace family;
  auto exact = [](std::size_t k) { return std::optional<FormulaValue>(FormulaValue{k, k}); };
  const std::optional<FormulaValue> none;
  return std::visit(
      detail::overloaded{
          [&](const Path &s) {
            if (s.n == 1)
              return exact(0);
            return exact(s.n <= 3 ? 1 : 2);
          },
          [&](const Cycle &s) { return exact(s.n % 4 == 0 ? 2 : 3); },
          [&](const Complete &s) { return exact(s.n * (s.n - 1) / 2); },
          [&](const CompleteBipartite &s) { return exact(std::min(s.p, s.q)); },
          [&](const Star &) { return exact(1); },
          [&](const Wheel &s) {
            if (s.n % 2 == 0)
              return exact(6);
            return exact((s.n - 1) % 4 == 0 ? 4 : 5);
          },
          [&](const Petersen &) { return exact(5); },
          [&](const Friendship &) { return exact(3); },
          [&](const Coalesced &s) { return exact(s.stars.size() * (s.stars.size() - 1) / 2); },
          [&](const CoronaComplete &s) { return s.p >= 3 ? exact(s.p * (s.p - 1) / 2) : none; },
          [&](const UnicyclicTriangle &) { return exact(3); },
          [&](const Unicyclic &s) {
            if (s.cycle_len == 3)
              return exact(3);
            return std::optional<FormulaValue>(FormulaValue{2, 4});
          },
          [&](const Ladder &s) { return s.n >= 3 ? exact(3) : none; },
          [&](const Grid &s) {
            const std::size_t a = std::min(s.r, s.s), b = std::max(s.r, s.s);
            if (a >= 4)
              return exact(4);
            if (a == 1)
              return b == 1 ? exact(0) : exact(b <= 3 ? 1 : 2);
            if (a == 2 && b >= 3)
              return exact(3);
            return none;
          },
          [&](const Honeycomb &) { return exact(3); },
          [&](const PerfectBinaryTree &s) {
            if (s.height == 0)
              return exact(0);
            if (s.height == 1)
              return exact(1);
            return 2 * s.height >= 7 ? exact(3) : none;
          },
          [&](const TreeTPrime &) { return exact(3); },
          [&](const Aleph &) { return exact(4); },
          [&](const GadgetB &) { return exact(3); },
      },
      spec);
}

inline FamilyAnswer construct_coloring(const FamilySpec &spec) {
  const auto builder = detail::build(spec);
  FamilyAnswer ans;
  ans.graph = builder.graph();
  ans.coloring = normalized(builder.coloring(ans.graph));
  ans.claimed = formula_value(spec);
  return ans;
}

/// Random attachment list: extra vertex i hangs from a uniformly chosen
/// earlier vertex.
inline std::vector<Vertex> random_parents(std::size_t base, std::size_t extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> parents;
  for (std::size_t i = 0; i < extra; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, base + i - 1);
    parents.push_back(static_cast<Vertex>(pick(rng)));
  }
  return parents;
}

inline std::string_view family_name(const FamilySpec &spec) {
  static constexpr std::string_view names[] = {
      "path",       "cycle",           "complete",          "complete_bipartite",
      "star",       "wheel",           "petersen",          "friendship",
      "coalesced",  "corona_complete", "unicyclic_triangle", "unicyclic",
      "ladder",     "grid",            "honeycomb",         "perfect_binary_tree",
      "tree_T_prime", "aleph",         "gadget_B"};
  return names[spec.index()];
}

/// Builds a spec from a family name and integer parameters, e.g.
/// ("grid", {4, 5}) or ("coalesced", {1, 2, 3}).
inline FamilySpec make_family(std::string_view name, const std::vector<std::size_t> &p) {
  using namespace family;
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw FamilyError(std::string(name) + " takes " + std::to_string(count) + " parameter(s), got " +
                        std::to_string(p.size()));
  };
  auto vertices = [&](std::size_t from) {
    std::vector<Vertex> out;
    for (std::size_t i = from; i < p.size(); ++i)
      out.push_back(static_cast<Vertex>(p[i]));
    return out;
  };
  if (name == "path") { need(1); return Path{p[0]}; }
  if (name == "cycle") { need(1); return Cycle{p[0]}; }
  if (name == "complete") { need(1); return Complete{p[0]}; }
  if (name == "complete_bipartite") { need(2); return CompleteBipartite{p[0], p[1]}; }
  if (name == "star") { need(1); return Star{p[0]}; }
  if (name == "wheel") { need(1); return Wheel{p[0]}; }
  if (name == "petersen") { need(0); return Petersen{}; }
  if (name == "friendship") { need(1); return Friendship{p[0]}; }
  if (name == "coalesced") return Coalesced{p};
  if (name == "corona_complete") { need(1); return CoronaComplete{p[0]}; }
  if (name == "unicyclic_triangle") return UnicyclicTriangle{vertices(0)};
  if (name == "unicyclic") {
    if (p.empty())
      throw FamilyError("unicyclic takes a cycle length followed by parent ids");
    return Unicyclic{p[0], vertices(1)};
  }
  if (name == "ladder") { need(1); return Ladder{p[0]}; }
  if (name == "grid") { need(2); return Grid{p[0], p[1]}; }
  if (name == "honeycomb") { need(2); return Honeycomb{p[0], p[1]}; }
  if (name == "perfect_binary_tree") { need(1); return PerfectBinaryTree{p[0]}; }
  if (name == "tree_T_prime") { need(0); return TreeTPrime{}; }
  if (name == "aleph") { need(0); return Aleph{}; }
  if (name == "gadget_B") { need(0); return GadgetB{}; }
  throw FamilyError("unknown family '" + std::string(name) + "'");
}

} // namespace iec
