#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iec/coloring.hpp"
#include "iec/families.hpp"
#include "iec/graph.hpp"
#include "iec/solver.hpp"

namespace iec {

/// One copy of gadget B standing in for a source edge.
struct GadgetRecord {
  Edge source;
  /// Host vertex for each gadget role, indexed like GadgetLayout (u, b, v, w1, ...).
  std::array<Vertex, GadgetLayout::order> vertices{};
  Vertex b = 0;
  EdgeId ub{0}, bv{0}, e{0};
  /// Host edge ids, in the order ub, bv, bw1, bw2, w1x1, w1x2, w2x1, w2x2, x1y1, x2y2, y1y2.
  std::array<EdgeId, GadgetLayout::size> edges{};

  std::array<EdgeId, 4> b_incident() const { return {edges[0], edges[1], edges[2], edges[3]}; }
};

struct GadgetEmbedding {
  Graph host;
  std::vector<GadgetRecord> gadgets; // indexed by source EdgeId
};

namespace detail {
// Gadget edges as role pairs, in GadgetRecord::edges order.
inline constexpr std::array<std::pair<Vertex, Vertex>, GadgetLayout::size> gadget_edge_roles{{
    {GadgetLayout::u, GadgetLayout::b},
    {GadgetLayout::b, GadgetLayout::v},
    {GadgetLayout::b, GadgetLayout::w1},
    {GadgetLayout::b, GadgetLayout::w2},
    {GadgetLayout::w1, GadgetLayout::x1},
    {GadgetLayout::w1, GadgetLayout::x2},
    {GadgetLayout::w2, GadgetLayout::x1},
    {GadgetLayout::w2, GadgetLayout::x2},
    {GadgetLayout::x1, GadgetLayout::y1},
    {GadgetLayout::x2, GadgetLayout::y2},
    {GadgetLayout::y1, GadgetLayout::y2},
}};
inline constexpr std::size_t gadget_internal = GadgetLayout::order - 2;
} // namespace detail

/// Replaces every edge uv of g by a copy of gadget B glued at u and v. Source
/// vertices keep their ids; the seven internal vertices of gadget i get ids
/// n + 7i .. n + 7i + 6 in role order b, w1, w2, x1, x2, y1, y2.
inline GadgetEmbedding build_reduction(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<GadgetRecord> gadgets(g.size());
  std::vector<Edge> host_edges;
  host_edges.reserve(GadgetLayout::size * g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    GadgetRecord &rec = gadgets[i];
    rec.source = g.edges()[i];
    rec.vertices[GadgetLayout::u] = rec.source.u;
    rec.vertices[GadgetLayout::v] = rec.source.v;
    Vertex next = static_cast<Vertex>(n + detail::gadget_internal * i);
    for (Vertex role = 0; role < GadgetLayout::order; ++role)
      if (role != GadgetLayout::u && role != GadgetLayout::v)
        rec.vertices[role] = next++;
    rec.b = rec.vertices[GadgetLayout::b];
    for (auto [a, b] : detail::gadget_edge_roles)
      host_edges.push_back({rec.vertices[a], rec.vertices[b]});
  }

  GadgetEmbedding emb;
  emb.host = Graph::from_edges(n + detail::gadget_internal * g.size(), host_edges);
  for (GadgetRecord &rec : gadgets) {
    for (std::size_t k = 0; k < GadgetLayout::size; ++k) {
      auto [a, b] = detail::gadget_edge_roles[k];
      rec.edges[k] = *emb.host.edge_id(rec.vertices[a], rec.vertices[b]);
    }
    rec.ub = rec.edges[0];
    rec.bv = rec.edges[1];
    rec.e = rec.edges[10];
  }
  emb.gadgets = std::move(gadgets);
  return emb;
}

struct GadgetLemmaReport {
  std::size_t valid_3_colorings = 0;
  bool hub_and_apex_monochromatic = true; // b-incident edges and e share a color
  bool unique_up_to_permutation = true;
  bool two_colorable = false;

  bool ok() const {
    return valid_3_colorings > 0 && hub_and_apex_monochromatic && unique_up_to_permutation &&
           !two_colorable;
  }
};

namespace detail {
// Visits every assignment of k colors to m edges, stopping early if f returns false.
template <class F> void for_each_assignment(std::size_t m, Color k, F &&f) {
  std::vector<Color> c(m, 0);
  while (true) {
    if (!f(c))
      return;
    std::size_t i = 0;
    while (i < m && ++c[i] == k)
      c[i++] = 0;
    if (i == m)
      return;
  }
}
} // namespace detail

/// Exhaustive check of the gadget's coloring properties over all 3^11 and
/// 2^11 assignments, with validate() as the only acceptor.
inline GadgetLemmaReport verify_gadget_lemma() {
  const Graph gadget = generate(family::GadgetB{});
  std::array<EdgeId, 5> forced{};
  for (std::size_t k = 0; k < 4; ++k) {
    auto [a, b] = detail::gadget_edge_roles[k];
    forced[k] = *gadget.edge_id(a, b);
  }
  forced[4] = *gadget.edge_id(GadgetLayout::y1, GadgetLayout::y2);

  GadgetLemmaReport rep;
  std::optional<EdgeColoring> canonical;
  detail::for_each_assignment(gadget.size(), 3, [&](const std::vector<Color> &c) {
    const EdgeColoring col(c);
    if (!validate(gadget, col).valid)
      return true;
    ++rep.valid_3_colorings;
    for (EdgeId e : forced)
      if (col[e] != col[forced[0]])
        rep.hub_and_apex_monochromatic = false;
    const EdgeColoring norm = normalized(col);
    if (!canonical)
      canonical = norm;
    else if (!(norm == *canonical))
      rep.unique_up_to_permutation = false;
    return true;
  });
  detail::for_each_assignment(gadget.size(), 2, [&](const std::vector<Color> &c) {
    if (validate(gadget, EdgeColoring(c)).valid)
      rep.two_colorable = true;
    return !rep.two_colorable;
  });
  return rep;
}

/// Forward direction: a proper edge coloring of g with at least 3 colors
/// becomes an injective coloring of the host. Each gadget's hub star and apex
/// edge take the source color; the two remaining branches take two other colors.
inline EdgeColoring extend_coloring(const Graph &g, const GadgetEmbedding &emb,
                                    const EdgeColoring &proper) {
  detail::require_bound(g, proper);
  Color palette = 0;
  for (Color c : proper.colors())
    palette = std::max<Color>(palette, c + 1);
  palette = std::max<Color>(palette, 3);

  std::vector<Color> out(emb.host.size(), 0);
  for (std::size_t i = 0; i < emb.gadgets.size(); ++i) {
    const GadgetRecord &rec = emb.gadgets[i];
    const Color c1 = proper[EdgeId(i)];
    const Color c2 = (c1 + 1) % palette, c3 = (c1 + 2) % palette;
    const Color role_color[GadgetLayout::size] = {c1, c1, c1, c1, c2, c3, c2, c3, c2, c3, c1};
    for (std::size_t k = 0; k < GadgetLayout::size; ++k)
      out[rec.edges[k].index] = role_color[k];
  }
  return EdgeColoring(std::move(out));
}

struct LiftResult {
  std::optional<EdgeColoring> coloring;
  std::string error; // empty on success
};

/// Backward direction: source edge uv takes the color of its gadget's hub
/// star. Fails when some hub star is not monochromatic.
inline LiftResult lift_coloring(const Graph &g, const GadgetEmbedding &emb,
                                const EdgeColoring &host_coloring) {
  detail::require_bound(emb.host, host_coloring);
  std::vector<Color> out(g.size(), 0);
  for (std::size_t i = 0; i < emb.gadgets.size(); ++i) {
    const auto hub = emb.gadgets[i].b_incident();
    const Color c = host_coloring[hub[0]];
    for (EdgeId e : hub)
      if (host_coloring[e] != c)
        return {std::nullopt, "gadget " + std::to_string(i) + " has a hub star with mixed colors"};
    out[i] = c;
  }
  return {EdgeColoring(std::move(out)), {}};
}

struct EquivalenceReport {
  std::size_t edge_chromatic = 0;  // χ′(g)
  std::size_t host_index = 0;      // χ′ᵢ of the host
  bool equal = false;
  /// The host can never go below 3 (gadget B alone needs 3), so the check is
  /// host_index == max(3, χ′(g)); this coincides with `equal` when χ′(g) ≥ 3.
  std::size_t expected_host = 0;
  bool holds = false;
  bool timed_out = false;
  /// Canonical extension of the χ′ witness validates on the host (χ′ ≥ 3 only).
  bool forward_valid = false;
  /// Lifting the host witness back is informational: with more than three
  /// colors an optimal host coloring may mix colors on a hub star.
  std::optional<EdgeColoring> lifted;
  bool lift_proper = false;
  std::string lift_error;
};

inline EquivalenceReport verify_equivalence(const Graph &g, const SolveOptions &opts = {}) {
  EquivalenceReport rep;
  const SolveResult chi = edge_chromatic_number(g, opts);
  const GadgetEmbedding emb = build_reduction(g);
  const SolveResult host = injective_chromatic_index(emb.host, opts);
  rep.timed_out = chi.timed_out || host.timed_out;
  rep.edge_chromatic = chi.value;
  rep.host_index = host.value;
  rep.equal = chi.value == host.value;
  rep.expected_host = std::max<std::size_t>(3, chi.value);
  rep.holds = !rep.timed_out && rep.host_index == rep.expected_host;
  if (g.size() == 0)
    return rep;

  if (chi.value >= 3 && !chi.timed_out)
    rep.forward_valid = validate(emb.host, extend_coloring(g, emb, chi.witness)).valid;

  LiftResult lift = lift_coloring(g, emb, host.witness);
  rep.lift_error = std::move(lift.error);
  if (lift.coloring) {
    rep.lift_proper = is_proper_edge_coloring(g, *lift.coloring);
    if (!rep.lift_proper)
      rep.lift_error = "lifted coloring is not a proper edge coloring";
    rep.lifted = std::move(lift.coloring);
  }
  return rep;
}

} // namespace iec
