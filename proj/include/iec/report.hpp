#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "iec/bounds.hpp"
#include "iec/coloring.hpp"
#include "iec/conflict_graph.hpp"
#include "iec/families.hpp"
#include "iec/graph.hpp"
#include "iec/reduction.hpp"
#include "iec/solver.hpp"

namespace iec {

using Json = nlohmann::ordered_json;

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

inline Json edge_json(const Edge &e) { return Json::array({e.u, e.v}); }

inline Json edges_json(const Graph &g) {
  Json a = Json::array();
  for (const Edge &e : g.edges())
    a.push_back(edge_json(e));
  return a;
}

inline Json graph_summary(const Graph &g) {
  return Json{{"fingerprint", hex64(fingerprint(g))},
              {"num_vertices", g.order()},
              {"num_edges", g.size()}};
}

inline Json bound_trail(const std::vector<NamedBound> &trail) {
  Json a = Json::array();
  for (const auto &b : trail)
    a.push_back({{"name", b.name}, {"value", b.value}});
  return a;
}

inline Json to_json(const SolveResult &r) {
  return Json{{"value", r.value},
              {"proven_lower", r.proven_lower},
              {"optimal", r.optimal()},
              {"timed_out", r.timed_out},
              {"lower_bounds", bound_trail(r.lower_bound_trail)},
              {"upper_bounds", bound_trail(r.upper_bound_trail)},
              {"witness", r.witness.colors()},
              {"stats", {{"nodes", r.stats.nodes}, {"elapsed_ms", r.stats.elapsed_ms}}}};
}

inline Json to_json(const Graph &g, const ValidationReport &rep) {
  Json v = Json::array();
  for (const auto &t : rep.violations)
    v.push_back({{"first", edge_json(g.edge(t.first))},
                 {"middle", edge_json(g.edge(t.middle))},
                 {"last", edge_json(g.edge(t.last))}});
  return Json{{"valid", rep.valid}, {"num_violations", rep.violations.size()}, {"violations", v}};
}

template <class T> Json optional_json(const std::optional<T> &x) {
  return x ? Json(*x) : Json(nullptr);
}

inline Json to_json(const Bounds &b) {
  Json delta = nullptr;
  if (b.delta_bound)
    delta = {{"num", b.delta_bound->num},
             {"den", b.delta_bound->den},
             {"floor", b.delta_bound->floor()}};
  Json uni = nullptr;
  if (b.unicyclic_range)
    uni = Json::array({b.unicyclic_range->first, b.unicyclic_range->second});
  return Json{{"lower", b.lower()},
              {"upper", b.upper()},
              {"lower_bounds",
               {{"omega", b.omega},
                {"omega_prime", b.omega_prime},
                {"conflict_clique", b.conflict_clique_lb},
                {"conflict_structure", b.conflict_structure_lb}}},
              {"upper_bounds",
               {{"size", b.size_m},
                {"diameter", optional_json(b.diameter_bound)},
                {"bipartite", optional_json(b.bipartite_bound)},
                {"max_degree", delta},
                {"independent_domination", optional_json(b.idom_bound)},
                {"independence", optional_json(b.alpha_bound)},
                {"tree", optional_json(b.tree_ub)}}},
              {"unicyclic_range", uni}};
}

inline Json to_json(const Graph &g, const Classification &c) {
  Json j{{"exact", c.exact},
         {"value", c.exact ? Json(c.lo) : Json(nullptr)},
         {"lo", c.lo},
         {"hi", c.hi},
         {"rule", rule_tag(c.reason)}};
  Json w = nullptr;
  if (!c.stars.empty())
    w = {{"stars", c.stars}};
  else if (!c.conflict_sides.empty())
    w = {{"conflict_sides", c.conflict_sides}};
  else if (!c.odd_conflict_cycle.empty()) {
    Json cyc = Json::array();
    for (EdgeId e : c.odd_conflict_cycle)
      cyc.push_back(edge_json(g.edge(e)));
    w = {{"odd_conflict_cycle", cyc}};
  }
  j["witness"] = w;
  return j;
}

inline Json to_json(const FormulaValue &f) {
  if (f.exact())
    return Json(f.lo);
  return Json{{"lo", f.lo}, {"hi", f.hi}};
}

inline Json to_json(const ConflictGraph &cg, const Graph &g) {
  Json es = Json::array();
  for (std::size_t i = 0; i < cg.order(); ++i)
    for (std::size_t j : cg.neighbors(i))
      if (j > i)
        es.push_back(Json::array({i, j}));
  auto bip = is_bipartite_conflict(cg);
  Json cyc = Json::array();
  for (EdgeId e : bip.odd_cycle)
    cyc.push_back(e.index);
  return Json{{"num_vertices", cg.order()},
              {"num_edges", cg.size()},
              {"vertex_labels", edges_json(g)},
              {"edges", es},
              {"bipartite", bip.bipartite},
              {"odd_cycle", cyc}};
}

inline Json to_json(const GadgetEmbedding &emb) {
  Json gadgets = Json::array();
  for (const GadgetRecord &r : emb.gadgets) {
    Json ids = Json::array();
    for (EdgeId e : r.edges)
      ids.push_back(e.index);
    gadgets.push_back({{"source", edge_json(r.source)},
                       {"b", r.b},
                       {"vertices", r.vertices},
                       {"ub", r.ub.index},
                       {"bv", r.bv.index},
                       {"e", r.e.index},
                       {"edges", ids}});
  }
  return Json{{"host", graph_summary(emb.host)},
              {"host_edges", edges_json(emb.host)},
              {"gadgets", gadgets}};
}

inline Json to_json(const EquivalenceReport &r) {
  return Json{{"edge_chromatic", r.edge_chromatic},
              {"host_index", r.host_index},
              {"equal", r.equal},
              {"expected_host", r.expected_host},
              {"holds", r.holds},
              {"timed_out", r.timed_out},
              {"forward_valid", r.forward_valid},
              {"lift",
               {{"proper", r.lift_proper},
                {"coloring", r.lifted ? Json(r.lifted->colors()) : Json(nullptr)},
                {"error", r.lift_error.empty() ? Json(nullptr) : Json(r.lift_error)}}}};
}

inline Json to_json(const GadgetLemmaReport &r) {
  return Json{{"valid_3_colorings", r.valid_3_colorings},
              {"hub_and_apex_monochromatic", r.hub_and_apex_monochromatic},
              {"unique_up_to_permutation", r.unique_up_to_permutation},
              {"two_colorable", r.two_colorable},
              {"ok", r.ok()}};
}

// Coloring files: {"num_vertices", "edges", "colors", "num_colors"}. A bare
// JSON array or a whitespace/comma separated list of colors is also accepted.

inline std::string write_coloring(const Graph &g, const EdgeColoring &c) {
  Json j{{"num_vertices", g.order()},
         {"edges", edges_json(g)},
         {"colors", c.colors()},
         {"num_colors", num_colors(c)}};
  return j.dump(2) + "\n";
}

class ColoringFileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses a coloring for `g`. When the file lists edges they must equal g's
/// canonical edge list.
inline EdgeColoring read_coloring(std::string_view text, const Graph &g) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    throw ColoringFileError("empty coloring file");
  std::vector<Color> colors;
  if (text[first] == '{' || text[first] == '[') {
    Json j;
    try {
      j = Json::parse(text);
      if (j.is_array()) {
        colors = j.get<std::vector<Color>>();
      } else {
        colors = j.at("colors").get<std::vector<Color>>();
        if (j.contains("edges")) {
          auto es = j.at("edges").get<std::vector<std::array<Vertex, 2>>>();
          std::vector<Edge> edges;
          for (auto [a, b] : es)
            edges.push_back({a, b});
          const std::size_t n = j.value("num_vertices", g.order());
          if (!(Graph::from_edges(n, edges) == g))
            throw ColoringMismatch("coloring file edges do not match the graph");
          // Colors follow the file's edge order; map onto canonical ids.
          std::vector<Color> canon(colors.size());
          if (colors.size() != edges.size())
            throw ColoringMismatch("coloring file lists " + std::to_string(edges.size()) +
                                   " edges but " + std::to_string(colors.size()) + " colors");
          for (std::size_t i = 0; i < edges.size(); ++i)
            canon[g.edge_id(edges[i].u, edges[i].v)->index] = colors[i];
          colors = std::move(canon);
        }
      }
    } catch (const Json::exception &e) {
      throw ColoringFileError(std::string("malformed coloring file: ") + e.what());
    } catch (const GraphError &e) {
      throw ColoringMismatch(std::string("coloring file edges: ") + e.what());
    }
  } else {
    std::string buf(text);
    for (char &ch : buf)
      if (ch == ',')
        ch = ' ';
    std::istringstream in(buf);
    long long x;
    while (in >> x) {
      if (x < 0)
        throw ColoringFileError("negative color " + std::to_string(x));
      colors.push_back(static_cast<Color>(x));
    }
    if (!in.eof())
      throw ColoringFileError("coloring file contains a non-integer token");
  }
  EdgeColoring c(std::move(colors));
  detail::require_bound(g, c);
  return c;
}

} // namespace iec
