#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "iec/bounds.hpp"
#include "iec/coloring.hpp"
#include "iec/conflict_graph.hpp"
#include "iec/families.hpp"
#include "iec/graph_io.hpp"
#include "iec/reduction.hpp"
#include "iec/report.hpp"
#include "iec/solver.hpp"

namespace iec {

/// Default solver time budget in milliseconds when --timeout-ms is absent.
inline constexpr const char *timeout_env = "IEC_TIMEOUT_MS";

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_invalid = 2, exit_timeout = 3 };

namespace cli {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string slurp(const std::string &path, std::istream &in) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw UsageError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

// stdin has no extension to go by: a first line with a single non-numeric
// token is graph6.
inline GraphFormat sniff_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto toks = detail::split_ws(line);
    if (toks.empty())
      continue;
    bool numeric = std::all_of(toks[0].begin(), toks[0].end(),
                               [](char c) { return c >= '0' && c <= '9'; });
    return toks.size() == 1 && !numeric ? GraphFormat::graph6 : GraphFormat::edge_list;
  }
  return GraphFormat::edge_list;
}

inline GraphFormat parse_format_flag(const std::string &f) {
  if (f == "el")
    return GraphFormat::edge_list;
  if (f == "g6")
    return GraphFormat::graph6;
  throw UsageError("unknown format '" + f + "' (expected el or g6)");
}

inline Graph load_graph(const std::string &path, const std::string &format, std::istream &in) {
  const std::string text = slurp(path, in);
  GraphFormat fmt;
  if (!format.empty())
    fmt = parse_format_flag(format);
  else if (path == "-")
    fmt = sniff_format(text);
  else
    fmt = format_from_path(path);
  return parse_graph(text, fmt);
}

inline std::optional<std::chrono::milliseconds> timeout_budget(long long flag) {
  if (flag > 0)
    return std::chrono::milliseconds(flag);
  if (flag == 0)
    throw UsageError("--timeout-ms must be positive");
  if (const char *env = std::getenv(timeout_env); env && *env) {
    char *end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v <= 0)
      throw UsageError(std::string(timeout_env) + " must be a positive integer");
    return std::chrono::milliseconds(v);
  }
  return std::nullopt;
}

inline Method parse_method(const std::string &m) {
  if (m == "auto")
    return Method::automatic;
  if (m == "exact")
    return Method::exact;
  if (m == "greedy")
    return Method::greedy;
  if (m == "oracle")
    return Method::brute_oracle;
  throw UsageError("unknown method '" + m + "'");
}

inline int emit(std::ostream &out, const std::string &command, Json input, Json result,
                const std::string &status, int code) {
  Json report{{"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)},
              {"status", status},
              {"exit_code", code}};
  out << report.dump(2) << "\n";
  return code;
}

inline std::string spec_label(std::string_view name, const std::vector<std::size_t> &params) {
  std::string s(name);
  s += "(";
  for (std::size_t i = 0; i < params.size(); ++i)
    s += (i ? "," : "") + std::to_string(params[i]);
  return s + ")";
}

struct SweepItem {
  std::string label;
  FamilySpec spec;
};

/// Parameter sweep for verify-family; `max_n` caps the size parameters.
inline std::vector<SweepItem> family_sweep(const std::string &name, std::size_t max_n,
                                           std::uint64_t seed) {
  std::vector<SweepItem> out;
  auto add = [&](std::vector<std::size_t> params) {
    out.push_back({spec_label(name, params), make_family(name, params)});
  };
  auto range1 = [&](std::size_t from) {
    for (std::size_t n = from; n <= max_n; ++n)
      add({n});
  };
  if (name == "path" || name == "complete" || name == "star" || name == "friendship" ||
      name == "ladder")
    range1(1);
  else if (name == "cycle")
    range1(3);
  else if (name == "wheel")
    range1(4);
  else if (name == "corona_complete")
    range1(3);
  else if (name == "perfect_binary_tree") {
    for (std::size_t h = 0; h <= std::min<std::size_t>(max_n, 12); ++h)
      add({h});
  } else if (name == "complete_bipartite" || name == "honeycomb") {
    for (std::size_t p = 1; p <= max_n; ++p)
      for (std::size_t q = 1; q <= max_n; ++q)
        add({p, q});
  } else if (name == "grid") {
    for (std::size_t r = 1; r <= max_n; ++r)
      for (std::size_t s = r; s <= max_n; ++s)
        add({r, s});
  } else if (name == "coalesced") {
    for (std::size_t p = 3; p <= max_n; ++p) {
      if (p <= 4) {
        std::vector<std::size_t> q(p, 1);
        while (true) {
          add(q);
          std::size_t i = 0;
          while (i < p && ++q[i] > 3)
            q[i++] = 1;
          if (i == p)
            break;
        }
      } else {
        for (std::size_t s = 1; s <= 3; ++s)
          add(std::vector<std::size_t>(p, s));
      }
    }
  } else if (name == "unicyclic_triangle" || name == "unicyclic") {
    const bool tri = name == "unicyclic_triangle";
    for (std::size_t len = 3; len <= (tri ? 3 : max_n); ++len)
      for (std::size_t n = len; n <= max_n; ++n)
        for (std::uint64_t s = 0; s < 2; ++s) {
          std::vector<std::size_t> params;
          if (!tri)
            params.push_back(len);
          for (Vertex p : random_parents(len, n - len, seed + 1000 * n + s))
            params.push_back(p);
          add(params);
        }
  } else {
    add({});
  }
  return out;
}

} // namespace cli

/// Runs the command line `args` (without the program name). Returns the
/// process exit code.
inline int run_cli(std::vector<std::string> args, std::istream &in, std::ostream &out,
                   std::ostream &err) {
  using namespace cli;
  CLI::App app{"Injective edge coloring toolkit", "iec"};
  app.require_subcommand(1);

  std::string path, coloring_path, format, method = "auto", family, graph_out, coloring_out;
  std::vector<std::size_t> params;
  long long timeout_ms = -1;
  std::uint64_t seed = 0;
  bool have_seed = false, check = false, json_out = false;
  std::size_t max_n = 8, max_solver_edges = 48;

  auto add_format = [&](CLI::App *c) {
    c->add_option("--format", format, "Input format: el (edge list) or g6 (graph6)")
        ->check(CLI::IsMember({"el", "g6"}));
  };
  auto add_timeout = [&](CLI::App *c) {
    c->add_option("--timeout-ms", timeout_ms, "Solver time budget in milliseconds");
  };

  auto *solve = app.add_subcommand("solve", "Exact injective chromatic index");
  solve->add_option("path", path, "Graph file, or - for stdin")->required();
  solve->add_option("--method", method, "auto|exact|greedy|oracle")
      ->check(CLI::IsMember({"auto", "exact", "greedy", "oracle"}));
  add_timeout(solve);
  add_format(solve);
  auto *seed_opt = solve->add_option("--seed", seed, "Tie-breaking seed");

  auto *validate_cmd = app.add_subcommand("validate", "Check a coloring for consecutive-edge conflicts");
  validate_cmd->add_option("graph", path, "Graph file")->required();
  validate_cmd->add_option("coloring", coloring_path, "Coloring file")->required();
  add_format(validate_cmd);

  auto *classify_cmd = app.add_subcommand("classify", "Polynomial-time classification");
  classify_cmd->add_option("path", path)->required();
  add_format(classify_cmd);

  auto *bounds_cmd = app.add_subcommand("bounds", "All lower and upper bounds");
  bounds_cmd->add_option("path", path)->required();
  add_format(bounds_cmd);

  auto *gen = app.add_subcommand("gen", "Generate a family member");
  gen->add_option("family", family)->required();
  gen->add_option("params", params);
  gen->add_option("--format", format, "Output format: el or g6")->check(CLI::IsMember({"el", "g6"}));
  gen->add_flag("--json", json_out, "Emit a report instead of the bare graph");

  auto *color_family = app.add_subcommand("color-family", "Constructive coloring of a family member");
  color_family->add_option("family", family)->required();
  color_family->add_option("params", params);
  color_family->add_option("--coloring-out", coloring_out, "Also write the coloring file here");

  auto *conflict = app.add_subcommand("conflict", "Conflict graph of the input");
  conflict->add_option("path", path)->required();
  add_format(conflict);
  conflict->add_option("--graph-out", graph_out, "Print the conflict graph as el or g6 instead")
      ->check(CLI::IsMember({"el", "g6"}));

  auto *reduce = app.add_subcommand("reduce", "Gadget substitution host graph");
  reduce->add_option("path", path)->required();
  add_format(reduce);
  reduce->add_flag("--check", check, "Also compare the edge chromatic number with the host index");
  add_timeout(reduce);

  auto *verify_family = app.add_subcommand("verify-family", "Sweep a family against its closed form");
  verify_family->add_option("family", family)->required();
  verify_family->add_option("--max-n", max_n, "Largest size parameter");
  verify_family->add_option("--max-solver-edges", max_solver_edges,
                            "Skip the exact solver above this many edges");
  verify_family->add_option("--seed", seed, "Seed for random attachments");
  add_timeout(verify_family);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  have_seed = seed_opt->count() > 0;

  try {
    if (solve->parsed()) {
      const Graph g = load_graph(path, format, in);
      SolveOptions opts;
      opts.method = parse_method(method);
      opts.time_budget = timeout_budget(timeout_ms);
      if (have_seed)
        opts.seed = seed;
      try {
        const SolveResult r = injective_chromatic_index(g, opts);
        return emit(out, "solve", graph_summary(g), to_json(r), r.timed_out ? "timeout" : "ok",
                    r.timed_out ? exit_timeout : exit_ok);
      } catch (const OracleError &e) {
        const bool budget = e.kind() == OracleError::Kind::budget_exceeded;
        return emit(out, "solve", graph_summary(g), Json{{"error", e.what()}},
                    budget ? "timeout" : "error", budget ? exit_timeout : exit_invalid);
      }
    }

    if (validate_cmd->parsed()) {
      const Graph g = load_graph(path, format, in);
      try {
        const EdgeColoring c = read_coloring(slurp(coloring_path, in), g);
        const ValidationReport rep = validate(g, c);
        Json res = to_json(g, rep);
        res["num_colors"] = num_colors(c);
        return emit(out, "validate", graph_summary(g), res, rep.valid ? "valid" : "invalid",
                    rep.valid ? exit_ok : exit_invalid);
      } catch (const ColoringMismatch &e) {
        err << "error: " << e.what() << "\n";
        return emit(out, "validate", graph_summary(g), Json{{"error", e.what()}}, "mismatch",
                    exit_invalid);
      }
    }

    if (classify_cmd->parsed()) {
      const Graph g = load_graph(path, format, in);
      return emit(out, "classify", graph_summary(g), to_json(g, classify(g)), "ok", exit_ok);
    }

    if (bounds_cmd->parsed()) {
      const Graph g = load_graph(path, format, in);
      return emit(out, "bounds", graph_summary(g), to_json(compute_bounds(g)), "ok", exit_ok);
    }

    if (gen->parsed()) {
      const Graph g = generate(make_family(family, params));
      if (json_out) {
        Json res{{"family", spec_label(family, params)}, {"edges", edges_json(g)}};
        return emit(out, "gen", graph_summary(g), res, "ok", exit_ok);
      }
      out << (format == "g6" ? to_graph6(g) + "\n" : to_edge_list(g));
      return exit_ok;
    }

    if (color_family->parsed()) {
      const FamilySpec spec = make_family(family, params);
      const FamilyAnswer ans = construct_coloring(spec);
      const bool valid = validate(ans.graph, ans.coloring).valid;
      const std::size_t k = num_colors(ans.coloring);
      bool matches = true;
      if (ans.claimed)
        matches = ans.claimed->exact() ? k == ans.claimed->lo
                                       : ans.claimed->lo <= k && k <= ans.claimed->hi;
      if (!coloring_out.empty()) {
        std::ofstream f(coloring_out, std::ios::binary);
        if (!f)
          throw UsageError("cannot write '" + coloring_out + "'");
        f << write_coloring(ans.graph, ans.coloring);
      }
      Json res{{"family", spec_label(family, params)},
               {"edges", edges_json(ans.graph)},
               {"colors", ans.coloring.colors()},
               {"num_colors", k},
               {"claimed", ans.claimed ? to_json(*ans.claimed) : Json(nullptr)},
               {"valid", valid},
               {"matches_claim", matches}};
      const bool ok = valid && matches;
      return emit(out, "color-family", graph_summary(ans.graph), res, ok ? "ok" : "mismatch",
                  ok ? exit_ok : exit_invalid);
    }

    if (conflict->parsed()) {
      const Graph g = load_graph(path, format, in);
      const ConflictGraph cg(g);
      if (!graph_out.empty()) {
        const Graph h = cg.to_graph();
        out << (graph_out == "g6" ? to_graph6(h) + "\n" : to_edge_list(h));
        return exit_ok;
      }
      return emit(out, "conflict", graph_summary(g), to_json(cg, g), "ok", exit_ok);
    }

    if (reduce->parsed()) {
      const Graph g = load_graph(path, format, in);
      const GadgetEmbedding emb = build_reduction(g);
      Json res = to_json(emb);
      if (!check)
        return emit(out, "reduce", graph_summary(g), res, "ok", exit_ok);
      SolveOptions opts;
      opts.time_budget = timeout_budget(timeout_ms);
      const EquivalenceReport eq = verify_equivalence(g, opts);
      res["equivalence"] = to_json(eq);
      if (eq.timed_out)
        return emit(out, "reduce", graph_summary(g), res, "timeout", exit_timeout);
      const bool ok = eq.holds && (eq.edge_chromatic < 3 || eq.forward_valid);
      return emit(out, "reduce", graph_summary(g), res, ok ? "ok" : "mismatch",
                  ok ? exit_ok : exit_invalid);
    }

    if (verify_family->parsed()) {
      SolveOptions opts;
      opts.time_budget = timeout_budget(timeout_ms);
      if (!opts.time_budget)
        opts.time_budget = std::chrono::milliseconds(10000);
      Json rows = Json::array();
      std::size_t mismatches = 0, timeouts = 0;
      for (const SweepItem &item : family_sweep(family, max_n, seed)) {
        FamilyAnswer ans;
        try {
          ans = construct_coloring(item.spec);
        } catch (const FamilyError &) {
          continue; // parameters outside the family's domain
        }
        const bool valid = validate(ans.graph, ans.coloring).valid;
        const std::size_t k = num_colors(ans.coloring);
        auto within = [&](std::size_t x) {
          return !ans.claimed || (ans.claimed->lo <= x && x <= ans.claimed->hi);
        };
        bool ok = valid && within(k) && (!ans.claimed || !ans.claimed->exact() || k == ans.claimed->lo);
        Json solver = nullptr;
        if (ans.graph.size() <= max_solver_edges) {
          const SolveResult r = injective_chromatic_index(ans.graph, opts);
          if (r.timed_out) {
            ++timeouts;
            solver = "timeout";
          } else {
            solver = r.value;
            ok = ok && within(r.value) && r.value <= k;
          }
        }
        mismatches += !ok;
        rows.push_back({{"instance", item.label},
                        {"num_vertices", ans.graph.order()},
                        {"num_edges", ans.graph.size()},
                        {"formula", ans.claimed ? to_json(*ans.claimed) : Json(nullptr)},
                        {"constructed", k},
                        {"valid", valid},
                        {"solver", solver},
                        {"status", ok ? "pass" : "mismatch"}});
      }
      const int code = mismatches ? exit_invalid : (timeouts ? exit_timeout : exit_ok);
      Json res{{"family", family},
               {"max_n", max_n},
               {"instances", rows.size()},
               {"mismatches", mismatches},
               {"timeouts", timeouts},
               {"results", rows}};
      return emit(out, "verify-family", Json{{"family", family}}, res,
                  mismatches ? "mismatch" : (timeouts ? "timeout" : "ok"), code);
    }
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ColoringFileError &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const FamilyError &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const GraphError &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

} // namespace iec
