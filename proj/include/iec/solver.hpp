#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <tuple>
#include <string>
#include <vector>

#include "iec/coloring.hpp"
#include "iec/conflict_graph.hpp"
#include "iec/graph.hpp"
#include "iec/graph_algorithms.hpp"

namespace iec {

enum class Method { automatic, exact, greedy, brute_oracle };

struct SolveOptions {
  Method method = Method::automatic;
  /// Wall-clock budget; must be positive when present.
  std::optional<std::chrono::milliseconds> time_budget;
  /// Randomizes DSATUR ties. Without it ties go to the lowest edge id.
  std::optional<std::uint64_t> seed;
};

struct NamedBound {
  std::string name;
  std::size_t value = 0;

  bool operator==(const NamedBound &) const = default;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

struct SolveResult {
  /// Optimum when !timed_out; otherwise the best coloring found (upper end of
  /// the proven bracket [proven_lower, value]).
  std::size_t value = 0;
  std::size_t proven_lower = 0;
  EdgeColoring witness;
  std::vector<NamedBound> lower_bound_trail;
  std::vector<NamedBound> upper_bound_trail;
  SolveStats stats;
  bool timed_out = false;

  bool optimal() const { return !timed_out && proven_lower == value; }
};

class SolveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;

  static Deadline from(const SolveOptions &opts) {
    if (opts.time_budget && opts.time_budget->count() <= 0)
      throw SolveError("time budget must be positive");
    Deadline d;
    if (opts.time_budget)
      d.at = Clock::now() + *opts.time_budget;
    return d;
  }

  bool expired() const { return at && Clock::now() >= *at; }
};

/// Abstract graph for vertex coloring: neighbor lists over [0, n).
struct ColoringInstance {
  std::vector<std::vector<std::size_t>> neighbors;

  std::size_t order() const { return neighbors.size(); }
};

/// Tie-break rank per vertex: identity, or a seeded shuffle.
inline std::vector<std::size_t> tie_ranks(std::size_t n, std::optional<std::uint64_t> seed) {
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(rank.begin(), rank.end(), rng);
  }
  return rank;
}

// Shared state for DSATUR: per-vertex counts of neighbors holding each color.
class Saturation {
public:
  Saturation(const ColoringInstance &inst, std::size_t colors)
      : inst_(inst), k_(colors), color_(inst.order(), -1), count_(inst.order() * colors, 0),
        sat_(inst.order(), 0) {}

  bool colored(std::size_t v) const { return color_[v] >= 0; }
  int color(std::size_t v) const { return color_[v]; }
  std::size_t saturation(std::size_t v) const { return sat_[v]; }
  bool allowed(std::size_t v, std::size_t c) const { return count_[v * k_ + c] == 0; }

  /// Assigns and returns false if some uncolored neighbor lost every color.
  bool assign(std::size_t v, std::size_t c) {
    color_[v] = static_cast<int>(c);
    bool alive = true;
    for (std::size_t w : inst_.neighbors[v]) {
      if (count_[w * k_ + c]++ == 0 && ++sat_[w] == k_ && color_[w] < 0)
        alive = false;
    }
    return alive;
  }

  void unassign(std::size_t v) {
    const auto c = static_cast<std::size_t>(color_[v]);
    color_[v] = -1;
    for (std::size_t w : inst_.neighbors[v])
      if (--count_[w * k_ + c] == 0)
        --sat_[w];
  }

  /// Uncolored vertex with highest saturation, then highest degree, then
  /// lowest tie rank. Returns order() when all are colored.
  std::size_t select(const std::vector<std::size_t> &rank) const {
    std::size_t best = inst_.order();
    for (std::size_t v = 0; v < inst_.order(); ++v) {
      if (color_[v] >= 0)
        continue;
      if (best == inst_.order()) {
        best = v;
        continue;
      }
      const auto key = [&](std::size_t x) {
        return std::tuple(sat_[x], inst_.neighbors[x].size());
      };
      if (key(v) > key(best) || (key(v) == key(best) && rank[v] < rank[best]))
        best = v;
    }
    return best;
  }

  std::vector<Color> colors() const {
    return std::vector<Color>(color_.begin(), color_.end());
  }

private:
  const ColoringInstance &inst_;
  std::size_t k_;
  std::vector<int> color_;
  std::vector<std::uint32_t> count_;
  std::vector<std::size_t> sat_;
};

inline std::vector<Color> dsatur_greedy(const ColoringInstance &inst,
                                        const std::vector<std::size_t> &rank) {
  const std::size_t n = inst.order();
  // n colors always suffice, so assign() never reports a dead end here.
  Saturation s(inst, std::max<std::size_t>(n, 1));
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t v = s.select(rank);
    std::size_t c = 0;
    while (!s.allowed(v, c))
      ++c;
    s.assign(v, c);
  }
  return s.colors();
}

enum class Decision { colorable, not_colorable, timed_out };

// Backtracking k-colorability with DSATUR ordering and forward checking.
// A vertex may open color q only when colors 0..q-1 are already in use.
class KColorSearch {
public:
  KColorSearch(const ColoringInstance &inst, std::size_t k, const std::vector<std::size_t> &rank,
               const Deadline &deadline, std::uint64_t &nodes)
      : inst_(inst), k_(k), rank_(rank), deadline_(deadline), nodes_(nodes), state_(inst, k) {}

  Decision run() {
    if (inst_.order() == 0)
      return Decision::colorable;
    if (k_ == 0)
      return Decision::not_colorable;
    if (search(0, 0))
      return Decision::colorable;
    return timed_out_ ? Decision::timed_out : Decision::not_colorable;
  }

  std::vector<Color> coloring() const { return state_.colors(); }

private:
  bool search(std::size_t done, std::size_t used) {
    if (done == inst_.order())
      return true;
    if ((++nodes_ & 1023U) == 0 && deadline_.expired())
      timed_out_ = true;
    if (timed_out_)
      return false;
    const std::size_t v = state_.select(rank_);
    const std::size_t limit = std::min(used + 1, k_);
    for (std::size_t c = 0; c < limit; ++c) {
      if (!state_.allowed(v, c))
        continue;
      const bool alive = state_.assign(v, c);
      if (alive && search(done + 1, std::max(used, c + 1)))
        return true;
      state_.unassign(v);
      if (timed_out_)
        return false;
    }
    return false;
  }

  const ColoringInstance &inst_;
  std::size_t k_;
  const std::vector<std::size_t> &rank_;
  const Deadline &deadline_;
  std::uint64_t &nodes_;
  Saturation state_;
  bool timed_out_ = false;
};

struct ChromaticOutcome {
  std::size_t value = 0;
  std::size_t proven_lower = 0;
  std::size_t greedy = 0;
  std::vector<Color> coloring;
  bool timed_out = false;
};

/// Ascends k from `lower` until the instance is k-colorable, seeded with a
/// DSATUR upper bound.
inline ChromaticOutcome chromatic_number(const ColoringInstance &inst, std::size_t lower,
                                         const std::vector<std::size_t> &rank,
                                         const Deadline &deadline, std::uint64_t &nodes) {
  ChromaticOutcome out;
  out.coloring = dsatur_greedy(inst, rank);
  out.greedy = inst.order() == 0
                   ? 0
                   : *std::max_element(out.coloring.begin(), out.coloring.end()) + 1;
  out.value = out.greedy;
  out.proven_lower = std::min(lower, out.greedy);
  for (std::size_t k = out.proven_lower; k < out.greedy; ++k) {
    KColorSearch search(inst, k, rank, deadline, nodes);
    const Decision d = search.run();
    if (d == Decision::timed_out) {
      out.timed_out = true;
      out.proven_lower = k;
      return out;
    }
    if (d == Decision::colorable) {
      out.value = k;
      out.proven_lower = k;
      out.coloring = search.coloring();
      return out;
    }
    out.proven_lower = k + 1;
  }
  out.proven_lower = out.value;
  return out;
}

inline ColoringInstance conflict_instance(const ConflictGraph &cg,
                                          const std::vector<std::size_t> &edge_ids) {
  std::vector<std::size_t> local(cg.order(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < edge_ids.size(); ++i)
    local[edge_ids[i]] = i;
  ColoringInstance inst;
  inst.neighbors.resize(edge_ids.size());
  for (std::size_t i = 0; i < edge_ids.size(); ++i)
    for (std::size_t j : cg.neighbors(edge_ids[i]))
      if (local[j] != static_cast<std::size_t>(-1))
        inst.neighbors[i].push_back(local[j]);
  return inst;
}

inline void raise_bound(std::vector<NamedBound> &trail, const std::string &name,
                        std::size_t value) {
  for (auto &b : trail)
    if (b.name == name) {
      b.value = std::max(b.value, value);
      return;
    }
  trail.push_back({name, value});
}

// Ordered triple check straight from the definition: a = xy, b = yz, c = zu.
inline bool consecutive(const Edge &a, const Edge &b, const Edge &c) {
  if (a == b || b == c || a == c)
    return false;
  for (Vertex y : {b.u, b.v}) {
    const Vertex z = b.other(y);
    if (a.touches(y) && c.touches(z))
      return true;
  }
  return false;
}

} // namespace detail

/// DSATUR coloring of the conflict graph, i.e. an injective edge coloring.
inline EdgeColoring greedy_upper_bound(const ConflictGraph &cg,
                                       std::optional<std::uint64_t> seed = std::nullopt) {
  std::vector<std::size_t> all(cg.order());
  std::iota(all.begin(), all.end(), 0);
  auto inst = detail::conflict_instance(cg, all);
  return EdgeColoring(detail::dsatur_greedy(inst, detail::tie_ranks(cg.order(), seed)));
}

class OracleError : public std::runtime_error {
public:
  enum class Kind { budget_exceeded, k_max_insufficient };

  OracleError(Kind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Exhaustive oracle that never looks at the conflict graph: enumerates color
/// assignments edge by edge (first use of colors in increasing order), prunes
/// partial assignments with the literal consecutive-triple test, and accepts
/// a full assignment only if validate() agrees.
inline EdgeColoring brute_force_coloring(const Graph &g, std::size_t k_max,
                                         std::uint64_t node_budget = 100'000'000) {
  const std::size_t m = g.size();
  if (m == 0)
    return EdgeColoring();

  // clash[i] = earlier edges j that may not share a color with edge i.
  std::vector<std::vector<std::size_t>> clash(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t mid = 0; mid < m; ++mid)
        if (detail::consecutive(g.edges()[i], g.edges()[mid], g.edges()[j])) {
          clash[i].push_back(j);
          break;
        }

  std::uint64_t nodes = 0;
  std::vector<Color> col(m, 0);
  for (std::size_t k = 1; k <= k_max; ++k) {
    // Iterative DFS over positions; next[i] is the next color to try at i.
    std::vector<std::size_t> next(m + 1, 0), used(m + 1, 0);
    std::size_t pos = 0;
    while (true) {
      if (pos == m) {
        EdgeColoring c(col);
        if (validate(g, c).valid)
          return c;
        --pos;
        continue;
      }
      const std::size_t limit = std::min(used[pos] + 1, k);
      bool placed = false;
      while (next[pos] < limit) {
        const auto c = static_cast<Color>(next[pos]++);
        if (++nodes > node_budget)
          throw OracleError(OracleError::Kind::budget_exceeded,
                            "brute-force oracle exceeded its node budget");
        bool ok = true;
        for (std::size_t j : clash[pos])
          if (col[j] == c) {
            ok = false;
            break;
          }
        if (!ok)
          continue;
        col[pos] = c;
        used[pos + 1] = std::max<std::size_t>(used[pos], c + 1);
        next[pos + 1] = 0;
        ++pos;
        placed = true;
        break;
      }
      if (placed)
        continue;
      if (pos == 0)
        break;
      --pos;
    }
  }
  throw OracleError(OracleError::Kind::k_max_insufficient,
                    "no injective edge coloring with at most " + std::to_string(k_max) +
                        " colors");
}

inline std::size_t brute_force_index(const Graph &g, std::size_t k_max,
                                     std::uint64_t node_budget = 100'000'000) {
  return num_colors(brute_force_coloring(g, k_max, node_budget));
}

/// Injective edge chromatic index: exact coloring of the conflict graph,
/// component by component (colors are reused across components).
inline SolveResult injective_chromatic_index(const Graph &g, const SolveOptions &opts = {}) {
  const auto start = detail::Clock::now();
  const auto deadline = detail::Deadline::from(opts);
  SolveResult res;
  res.witness = EdgeColoring(std::vector<Color>(g.size(), 0));
  auto finish = [&] {
    res.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(detail::Clock::now() - start).count();
    return res;
  };
  if (g.size() == 0) {
    res.witness = EdgeColoring();
    return finish();
  }

  if (opts.method == Method::brute_oracle) {
    res.witness = brute_force_coloring(g, g.size());
    res.value = res.proven_lower = num_colors(res.witness);
    res.lower_bound_trail.push_back({"brute_force", res.value});
    res.upper_bound_trail.push_back({"brute_force", res.value});
    return finish();
  }

  const ConflictGraph cg(g);
  const auto rank = detail::tie_ranks(g.size(), opts.seed);

  for (const auto &comp : connected_components(g)) {
    std::vector<std::size_t> ids;
    for (Vertex v : comp)
      for (EdgeId e : g.incident(v))
        if (g.edge(e).u == v)
          ids.push_back(e.index);
    if (ids.empty())
      continue;
    std::sort(ids.begin(), ids.end());

    const Graph sub = induced_subgraph(g, comp);
    const std::size_t omega = max_clique_size(sub);
    const std::size_t omega_prime = omega * (omega - 1) / 2;
    auto inst = detail::conflict_instance(cg, ids);

    std::vector<Bitset> rows(inst.order(), Bitset(inst.order()));
    for (std::size_t i = 0; i < inst.order(); ++i)
      for (std::size_t j : inst.neighbors[i])
        rows[i].set(j);
    const std::size_t clique = greedy_clique(rows).size();

    std::size_t odd = 1;
    {
      bool has_conflict = false;
      for (const auto &nb : inst.neighbors)
        has_conflict = has_conflict || !nb.empty();
      if (has_conflict) {
        odd = 2;
        auto tc = two_color(inst.order(), [&inst](std::size_t x) { return inst.neighbors[x]; });
        if (!tc.bipartite())
          odd = 3;
      }
    }

    detail::raise_bound(res.lower_bound_trail, "omega_prime", omega_prime);
    detail::raise_bound(res.lower_bound_trail, "conflict_clique", clique);
    detail::raise_bound(res.lower_bound_trail, "conflict_odd_cycle", odd);
    const std::size_t lower = std::max({omega_prime, clique, odd});

    std::vector<std::size_t> local_rank(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
      local_rank[i] = rank[ids[i]];

    detail::ChromaticOutcome out;
    if (opts.method == Method::greedy) {
      out.coloring = detail::dsatur_greedy(inst, local_rank);
      out.greedy = out.value = *std::max_element(out.coloring.begin(), out.coloring.end()) + 1;
      out.proven_lower = std::min(lower, out.value);
    } else {
      out = detail::chromatic_number(inst, lower, local_rank, deadline, res.stats.nodes);
    }
    detail::raise_bound(res.upper_bound_trail, "greedy", out.greedy);
    res.value = std::max(res.value, out.value);
    res.proven_lower = std::max(res.proven_lower, out.proven_lower);
    res.timed_out = res.timed_out || out.timed_out;
    for (std::size_t i = 0; i < ids.size(); ++i)
      res.witness[EdgeId(ids[i])] = out.coloring[i];
  }
  return finish();
}

/// Edge chromatic number χ′ by exact coloring of the line graph.
inline SolveResult edge_chromatic_number(const Graph &g, const SolveOptions &opts = {}) {
  const auto start = detail::Clock::now();
  const auto deadline = detail::Deadline::from(opts);
  SolveResult res;
  detail::ColoringInstance inst;
  inst.neighbors.resize(g.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = 0; j < inc.size(); ++j)
        if (i != j)
          inst.neighbors[inc[i].index].push_back(inc[j].index);
  }
  const std::size_t delta = g.max_degree();
  res.lower_bound_trail.push_back({"max_degree", delta});
  const auto rank = detail::tie_ranks(g.size(), opts.seed);
  detail::ChromaticOutcome out;
  if (opts.method == Method::greedy) {
    out.coloring = detail::dsatur_greedy(inst, rank);
    out.greedy = out.value =
        g.size() == 0 ? 0 : *std::max_element(out.coloring.begin(), out.coloring.end()) + 1;
    out.proven_lower = std::min(delta, out.value);
  } else {
    out = detail::chromatic_number(inst, delta, rank, deadline, res.stats.nodes);
  }
  res.upper_bound_trail.push_back({"greedy", out.greedy});
  res.value = out.value;
  res.proven_lower = out.proven_lower;
  res.timed_out = out.timed_out;
  res.witness = EdgeColoring(out.coloring);
  res.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(detail::Clock::now() - start).count();
  return res;
}

} // namespace iec
