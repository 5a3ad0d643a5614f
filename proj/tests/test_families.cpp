#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"

using namespace iec;
using namespace iec::testing;

namespace {

void expect_formula_met(const FamilySpec &spec, bool run_solver = true) {
  const FamilyAnswer ans = construct_coloring(spec);
  const auto label = std::string(family_name(spec));
  ASSERT_TRUE(ans.claimed) << label;
  const auto rep = validate(ans.graph, ans.coloring);
  EXPECT_TRUE(rep.valid) << label << " violations: " << rep.violations.size();
  const std::size_t k = num_colors(ans.coloring);
  EXPECT_GE(k, ans.claimed->lo) << label;
  EXPECT_LE(k, ans.claimed->hi) << label;
  if (run_solver) {
    const std::size_t v = solve_value(ans.graph);
    EXPECT_GE(v, ans.claimed->lo) << label;
    EXPECT_LE(v, ans.claimed->hi) << label;
  }
}

std::size_t exact_formula(const FamilySpec &s) {
  auto f = formula_value(s);
  if (!f || !f->exact())
    throw std::runtime_error("expected an exact formula");
  return f->lo;
}

} // namespace

TEST(GenerateTest, Shapes) {
  const Graph w5 = generate(family::Wheel{5});
  EXPECT_EQ(w5.order(), 5u);
  EXPECT_EQ(w5.size(), 8u);
  EXPECT_EQ(w5.degree(0), 4u);

  const Graph f2 = generate(family::Friendship{2});
  EXPECT_EQ(f2.order(), 5u);
  EXPECT_EQ(f2.size(), 6u);

  const Graph aleph = generate(family::Aleph{});
  EXPECT_EQ(aleph.order(), 16u);
  EXPECT_EQ(aleph.size(), 16u);
  EXPECT_TRUE(is_unicyclic(aleph));

  const Graph t = generate(family::TreeTPrime{});
  EXPECT_EQ(t.order(), 8u);
  EXPECT_TRUE(is_tree(t));

  const Graph b = generate(family::GadgetB{});
  EXPECT_EQ(b.order(), 9u);
  EXPECT_EQ(b.size(), 11u);
  EXPECT_EQ(b.degree(GadgetLayout::b), 4u);
  EXPECT_TRUE(b.adjacent(GadgetLayout::y1, GadgetLayout::y2));

  const Graph p = generate(family::Petersen{});
  EXPECT_EQ(p.size(), 15u);
  EXPECT_EQ(max_clique_size(p), 2u);
  EXPECT_EQ(*diameter(p), 2u);

  EXPECT_EQ(generate(family::PerfectBinaryTree{3}).order(), 15u);
  EXPECT_EQ(*diameter(generate(family::PerfectBinaryTree{3})), 6u);
  EXPECT_EQ(generate(family::Coalesced{{1, 2, 3}}).order(), 9u);
  EXPECT_EQ(generate(family::CoronaComplete{4}).size(), 10u);
  EXPECT_EQ(generate(family::Grid{3, 4}).size(), 17u);
}

TEST(GenerateTest, GridTwoByNIsLadder) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const Graph grid = generate(family::Grid{2, n});
    const Graph ladder = generate(family::Ladder{n});
    // Same graph up to the relabeling (i, j) -> i*n + j versus rows of the ladder.
    EXPECT_EQ(grid, ladder) << n;
  }
}

TEST(GenerateTest, HoneycombFacesAreHexagons) {
  const Graph h11 = generate(family::Honeycomb{1, 1});
  EXPECT_EQ(h11.order(), 6u);
  EXPECT_EQ(h11.size(), 6u);
  for (Vertex v = 0; v < 6; ++v)
    EXPECT_EQ(h11.degree(v), 2u);
  // Euler: a planar patch of r*c hexagons has r*c + 1 faces.
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t c = 1; c <= 4; ++c) {
      const Graph h = generate(family::Honeycomb{r, c});
      EXPECT_TRUE(is_connected(h));
      EXPECT_EQ(h.size() + 2, h.order() + r * c + 1) << r << "x" << c;
      EXPECT_LE(h.max_degree(), 3u);
      const auto b = bipartition(h);
      EXPECT_TRUE(b.parts.has_value());
    }
}

TEST(GenerateTest, InvalidParameters) {
  EXPECT_THROW(generate(family::Cycle{2}), FamilyError);
  EXPECT_THROW(generate(family::Wheel{3}), FamilyError);
  EXPECT_THROW(generate(family::Coalesced{{1, 1}}), FamilyError);
  EXPECT_THROW(generate(family::Coalesced{{1, 0, 1}}), FamilyError);
  EXPECT_THROW(generate(family::Unicyclic{4, {7}}), FamilyError);
  EXPECT_THROW(generate(family::Honeycomb{0, 1}), FamilyError);
  EXPECT_THROW(make_family("nope", {}), FamilyError);
  EXPECT_THROW(make_family("grid", {3}), FamilyError);
}

TEST(FormulaTest, Examples) {
  EXPECT_EQ(exact_formula(family::Cycle{12}), 2u);
  EXPECT_EQ(exact_formula(family::Wheel{9}), 4u);
  EXPECT_EQ(exact_formula(family::CompleteBipartite{3, 7}), 3u);
  EXPECT_EQ(exact_formula(family::Petersen{}), 5u);
  EXPECT_EQ(exact_formula(family::Path{3}), 1u);
  EXPECT_EQ(exact_formula(family::Path{4}), 2u);
  EXPECT_EQ(exact_formula(family::Wheel{6}), 6u);
  EXPECT_EQ(exact_formula(family::Wheel{7}), 5u);
  EXPECT_EQ(exact_formula(family::Aleph{}), 4u);
  EXPECT_EQ(*formula_value(family::Unicyclic{5, {0}}), (FormulaValue{2, 4}));
}

TEST(FormulaTest, NoFormulaOutsideProvenRanges) {
  EXPECT_FALSE(formula_value(family::PerfectBinaryTree{2}));
  EXPECT_FALSE(formula_value(family::PerfectBinaryTree{3}));
  EXPECT_TRUE(formula_value(family::PerfectBinaryTree{4}));
  EXPECT_FALSE(formula_value(family::Grid{3, 5}));
  EXPECT_FALSE(formula_value(family::Ladder{2}));
  // No claim means no count check, but the coloring must still validate.
  const auto a = construct_coloring(family::PerfectBinaryTree{3});
  EXPECT_FALSE(a.claimed);
  EXPECT_TRUE(validate(a.graph, a.coloring).valid);
}

TEST(ConstructTest, ExplicitPatterns) {
  const auto p9 = construct_coloring(family::Path{9});
  EXPECT_EQ(p9.coloring.colors(), (std::vector<Color>{0, 0, 1, 1, 0, 0, 1, 1}));

  const auto b = construct_coloring(family::GadgetB{});
  const Color hub = b.coloring[*b.graph.edge_id(GadgetLayout::u, GadgetLayout::b)];
  for (Vertex w : {GadgetLayout::v, GadgetLayout::w1, GadgetLayout::w2})
    EXPECT_EQ(b.coloring[*b.graph.edge_id(GadgetLayout::b, w)], hub);
  EXPECT_EQ(b.coloring[*b.graph.edge_id(GadgetLayout::y1, GadgetLayout::y2)], hub);
  EXPECT_EQ(num_colors(b.coloring), 3u);

  // Ladder: every edge has exactly one marked endpoint, and shares its label.
  const std::size_t n = 6;
  const auto lad = construct_coloring(family::Ladder{n});
  auto marked = [n](Vertex v) {
    const std::size_t col = v % n;
    return (v < n) == (col % 2 == 0);
  };
  for (std::size_t i = 0; i < lad.graph.size(); ++i) {
    const Edge &e = lad.graph.edges()[i];
    ASSERT_NE(marked(e.u), marked(e.v));
    const Vertex m = marked(e.u) ? e.u : e.v;
    const Color label = lad.coloring[EdgeId(i)];
    for (std::size_t j = 0; j < lad.graph.size(); ++j)
      if (lad.graph.edges()[j].touches(m)) {
        EXPECT_EQ(lad.coloring[EdgeId(j)], label);
      }
  }
}

TEST(ConstructTest, SweepsValidateAndMatchSolver) {
  for (std::size_t n = 2; n <= 12; ++n)
    expect_formula_met(family::Path{n});
  for (std::size_t n = 3; n <= 12; ++n)
    expect_formula_met(family::Cycle{n});
  for (std::size_t n = 1; n <= 6; ++n)
    expect_formula_met(family::Complete{n});
  for (std::size_t p = 1; p <= 4; ++p)
    for (std::size_t q = 1; q <= 4; ++q)
      expect_formula_met(family::CompleteBipartite{p, q});
  for (std::size_t n = 4; n <= 10; ++n)
    expect_formula_met(family::Wheel{n});
  for (std::size_t p = 1; p <= 4; ++p)
    expect_formula_met(family::Friendship{p});
  for (std::size_t n = 3; n <= 6; ++n)
    expect_formula_met(family::Ladder{n});
  expect_formula_met(family::Coalesced{{3, 1, 2}});
  expect_formula_met(family::CoronaComplete{5});
  expect_formula_met(family::Honeycomb{1, 1});
  expect_formula_met(family::Grid{4, 4});
  expect_formula_met(family::PerfectBinaryTree{4});
  expect_formula_met(family::Petersen{});
  expect_formula_met(family::Aleph{});
  expect_formula_met(family::TreeTPrime{});
  expect_formula_met(family::GadgetB{});
}

TEST(ConstructTest, LargeInstancesValidate) {
  // Beyond solver range: only the construction and its color count.
  for (auto spec : std::vector<FamilySpec>{family::Wheel{31}, family::Wheel{32}, family::Wheel{33},
                                           family::Wheel{34}, family::Cycle{103},
                                           family::Grid{9, 12}, family::Honeycomb{5, 7},
                                           family::Ladder{40}, family::PerfectBinaryTree{8},
                                           family::Coalesced{{4, 1, 2, 5, 3, 1}}})
    expect_formula_met(spec, false);
}

TEST(ConstructTest, RandomUnicyclic) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 60; ++t) {
    const std::size_t len = 3 + t % 7;
    const std::size_t extra = t % 9;
    const FamilySpec spec = family::Unicyclic{len, random_parents(len, extra, rng())};
    const auto ans = construct_coloring(spec);
    EXPECT_TRUE(is_unicyclic(ans.graph));
    EXPECT_TRUE(validate(ans.graph, ans.coloring).valid);
    const std::size_t k = num_colors(ans.coloring);
    if (len == 3)
      EXPECT_EQ(k, 3u);
    else
      EXPECT_LE(k, 4u);
    expect_formula_met(spec);
  }
}

TEST(ConstructTest, TreeLayeringOnRandomTrees) {
  // A Unicyclic spec is not a tree; trees go through the same layering via
  // perfect binary trees and T'; here random trees are layered directly.
  std::mt19937_64 rng(62);
  for (int t = 0; t < 500; ++t) {
    const Graph tree = random_tree(rng, 2 + t % 39);
    std::vector<Color> c(tree.size(), 0);
    detail::color_forest_by_depth(tree, c, {});
    const EdgeColoring col(c);
    EXPECT_TRUE(validate(tree, col).valid);
    EXPECT_LE(num_colors(col), 3u);
  }
}

TEST(ConstructTest, CoronaIsOmegaEic) {
  for (std::size_t p = 3; p <= 5; ++p) {
    const Graph g = generate(family::CoronaComplete{p});
    EXPECT_EQ(solve_value(g), p * (p - 1) / 2);
    EXPECT_TRUE(is_omega_eic(g));
  }
}

TEST(ConstructTest, PlantedCycleForcesThree) {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 50; ++t) {
    std::size_t p;
    do
      p = 4 + rng() % 6;
    while (p % 4 == 0);
    const std::size_t n = p + rng() % 3;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph g = random_connected_graph(rng, n, rng() % 3);
    for (std::size_t i = 0; i < p; ++i) {
      const Vertex a = perm[i], b = perm[(i + 1) % p];
      if (!g.adjacent(a, b))
        g = with_edge(g, {a, b});
    }
    EXPECT_GE(solve_value(g), 3u) << to_graph6(g);
    EXPECT_EQ(compute_bounds(g).conflict_structure_lb, 3u);
  }
}
