#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iec/conflict_graph.hpp"
#include "iec/graph.hpp"
#include "iec/graph_algorithms.hpp"
#include "iec/solver.hpp"

namespace iec {

/// Exact non-negative rational num/den (den > 0).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::int64_t floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool operator==(const Rational &) const = default;
};

/// Every bound on χ′ᵢ this library knows how to compute in polynomial time
/// (plus ω and i(G), which are exact searches at desk scale). Fields that do
/// not apply to the input stay empty.
struct Bounds {
  // Lower bounds.
  std::size_t omega = 0;
  std::size_t omega_prime = 0;
  std::size_t conflict_clique_lb = 0;
  /// 2 when the conflict graph has an edge, 3 when it has an odd cycle.
  std::size_t conflict_structure_lb = 0;

  // Upper bounds.
  std::size_t size_m = 0;
  std::optional<std::size_t> diameter_bound;
  std::optional<std::size_t> bipartite_bound;
  std::optional<Rational> delta_bound;
  std::optional<std::size_t> idom_bound;
  std::optional<std::size_t> alpha_bound;
  std::optional<std::size_t> tree_ub;

  /// [2, 4] for unicyclic graphs whose cycle has length at least 4.
  std::optional<std::pair<std::size_t, std::size_t>> unicyclic_range;

  std::size_t lower() const {
    std::size_t lo = std::max({omega_prime, conflict_clique_lb, conflict_structure_lb});
    if (size_m > 0)
      lo = std::max<std::size_t>(lo, 1);
    if (unicyclic_range)
      lo = std::max(lo, unicyclic_range->first);
    return lo;
  }

  std::size_t upper() const {
    std::size_t hi = size_m;
    auto take = [&hi](const std::optional<std::size_t> &b) {
      if (b)
        hi = std::min(hi, *b);
    };
    take(diameter_bound);
    take(bipartite_bound);
    take(idom_bound);
    take(alpha_bound);
    take(tree_ub);
    if (delta_bound)
      hi = std::min(hi, static_cast<std::size_t>(std::max<std::int64_t>(0, delta_bound->floor())));
    if (unicyclic_range)
      hi = std::min(hi, unicyclic_range->second);
    return hi;
  }
};

/// Length of the unique cycle of a unicyclic graph (leaf stripping).
inline std::size_t unicyclic_cycle_length(const Graph &g) {
  std::vector<std::size_t> deg(g.order());
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1)
      leaves.push_back(v);
  }
  std::size_t removed = 0;
  while (!leaves.empty()) {
    Vertex v = leaves.back();
    leaves.pop_back();
    ++removed;
    deg[v] = 0;
    for (Vertex w : g.neighbors(v))
      if (deg[w] > 0 && --deg[w] == 1)
        leaves.push_back(w);
  }
  return g.order() - removed;
}

inline bool is_star_forest(const Graph &g) {
  for (const auto &comp : connected_components(g)) {
    std::size_t twice = 0, max_deg = 0;
    for (Vertex v : comp) {
      twice += g.degree(v);
      max_deg = std::max(max_deg, g.degree(v));
    }
    const std::size_t k = comp.size();
    if (twice / 2 + 1 != k)
      return false;
    if (k > 2 && max_deg != k - 1)
      return false;
  }
  return true;
}

inline Bounds compute_bounds(const Graph &g) {
  Bounds b;
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  b.size_m = m;
  if (m == 0)
    return b;

  b.omega = max_clique_size(g);
  b.omega_prime = b.omega * (b.omega - 1) / 2;

  const ConflictGraph cg(g);
  b.conflict_clique_lb = greedy_conflict_clique(cg).size();
  b.conflict_structure_lb = cg.size() == 0 ? 1 : (is_bipartite_conflict(cg).bipartite ? 2 : 3);

  const bool connected = is_connected(g);
  if (connected && m >= 3)
    b.diameter_bound = m - *diameter(g) + 2;

  if (auto bp = bipartition(g); bp.parts) {
    // Isolated vertices do not change χ′ᵢ; count only vertices that carry edges.
    std::size_t first = 0, second = 0;
    for (Vertex v : bp.parts->first)
      first += g.degree(v) > 0;
    for (Vertex v : bp.parts->second)
      second += g.degree(v) > 0;
    b.bipartite_bound = std::min(first, second);
    if (connected && n >= 2) {
      const auto delta = static_cast<std::int64_t>(g.max_degree());
      const auto nn = static_cast<std::int64_t>(n);
      b.delta_bound = Rational{nn * delta - (nn - 1), delta};
      b.idom_bound = n - independent_domination_number(g);
      b.alpha_bound = independence_number(g);
    }
  }

  if (is_forest(g))
    b.tree_ub = 3;
  if (is_unicyclic(g) && unicyclic_cycle_length(g) >= 4)
    b.unicyclic_range = std::pair<std::size_t, std::size_t>{2, 4};
  return b;
}

enum class Rule {
  edgeless,
  star_forest,
  conflict_bipartite,
  tree_odd_conflict_cycle,
  complete,
  unicyclic_triangle,
  bounds_only,
};

inline std::string_view rule_tag(Rule r) {
  switch (r) {
  case Rule::edgeless: return "edgeless";
  case Rule::star_forest: return "star-forest";
  case Rule::conflict_bipartite: return "conflict-bipartite";
  case Rule::tree_odd_conflict_cycle: return "tree-odd-conflict-cycle";
  case Rule::complete: return "complete";
  case Rule::unicyclic_triangle: return "unicyclic-triangle";
  case Rule::bounds_only: return "bounds-only";
  }
  return "unknown";
}

struct Classification {
  bool exact = false;
  std::size_t lo = 0;
  std::size_t hi = 0;
  Rule reason = Rule::bounds_only;

  /// Witnesses; which one is filled depends on `reason`.
  std::vector<std::vector<Vertex>> stars;
  std::vector<std::uint8_t> conflict_sides;
  std::vector<EdgeId> odd_conflict_cycle;

  std::size_t value() const { return lo; }
};

namespace detail {
inline Classification exact_class(std::size_t k, Rule r) {
  Classification c;
  c.exact = true;
  c.lo = c.hi = k;
  c.reason = r;
  return c;
}
} // namespace detail

/// Polynomial-time classification. Never runs the exponential solver; when
/// no exact rule applies the result is the bound bracket.
inline Classification classify(const Graph &g) {
  if (g.size() == 0)
    return detail::exact_class(0, Rule::edgeless);
  if (is_star_forest(g)) {
    auto c = detail::exact_class(1, Rule::star_forest);
    for (auto &comp : connected_components(g))
      if (comp.size() > 1)
        c.stars.push_back(std::move(comp));
    return c;
  }
  const ConflictGraph cg(g);
  auto bip = is_bipartite_conflict(cg);
  if (bip.bipartite) {
    auto c = detail::exact_class(2, Rule::conflict_bipartite);
    c.conflict_sides = std::move(bip.side);
    return c;
  }
  if (is_forest(g)) {
    auto c = detail::exact_class(3, Rule::tree_odd_conflict_cycle);
    c.odd_conflict_cycle = std::move(bip.odd_cycle);
    return c;
  }
  if (is_connected(g) && is_complete(g))
    return detail::exact_class(g.size(), Rule::complete);
  if (is_unicyclic(g) && unicyclic_cycle_length(g) == 3)
    return detail::exact_class(3, Rule::unicyclic_triangle);

  const Bounds b = compute_bounds(g);
  Classification c;
  c.lo = b.lower();
  c.hi = b.upper();
  c.exact = c.lo == c.hi;
  c.reason = Rule::bounds_only;
  c.odd_conflict_cycle = std::move(bip.odd_cycle);
  return c;
}

/// χ′ᵢ(G) == ω′(G), decided with the exact solver. Throws SolveError when
/// the solver runs out of time.
inline bool is_omega_eic(const Graph &g, const SolveOptions &opts = {}) {
  const SolveResult r = injective_chromatic_index(g, opts);
  if (r.timed_out)
    throw SolveError("solver timed out before proving optimality");
  const std::size_t w = max_clique_size(g);
  return r.value == w * (w - (w > 0 ? 1 : 0)) / 2;
}

/// χ′ᵢ of a tree in polynomial time: 1 for stars, 2 when the conflict graph
/// is bipartite, 3 otherwise.
inline std::size_t tree_injective_index(const Graph &g) {
  if (!is_tree(g) || g.order() < 2)
    throw GraphError("tree_injective_index requires a tree with at least two vertices");
  if (is_star_forest(g))
    return 1;
  return is_bipartite_conflict(ConflictGraph(g)).bipartite ? 2 : 3;
}

} // namespace iec
