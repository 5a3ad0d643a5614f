#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "support.hpp"

using namespace iec;
using namespace iec::testing;

namespace {

Graph cycle(std::size_t n) { return generate(family::Cycle{n}); }
Graph path(std::size_t n) { return generate(family::Path{n}); }

// Brute-force references over vertex subsets (n <= 10).
std::size_t brute_alpha(const Graph &g) {
  std::size_t best = 0;
  for (unsigned s = 0; s < (1u << g.order()); ++s) {
    bool ok = true;
    for (const Edge &e : g.edges())
      ok = ok && !((s >> e.u & 1) && (s >> e.v & 1));
    if (ok)
      best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

std::size_t brute_omega(const Graph &g) {
  std::size_t best = 0;
  for (unsigned s = 0; s < (1u << g.order()); ++s) {
    bool ok = true;
    for (Vertex a = 0; a < g.order() && ok; ++a)
      for (Vertex b = a + 1; b < g.order() && ok; ++b)
        if ((s >> a & 1) && (s >> b & 1) && !g.adjacent(a, b))
          ok = false;
    if (ok)
      best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

std::size_t brute_idom(const Graph &g) {
  std::size_t best = g.order();
  for (unsigned s = 0; s < (1u << g.order()); ++s) {
    bool independent = true, dominating = true;
    for (const Edge &e : g.edges())
      independent = independent && !((s >> e.u & 1) && (s >> e.v & 1));
    for (Vertex v = 0; v < g.order() && dominating; ++v) {
      bool hit = s >> v & 1;
      for (Vertex w : g.neighbors(v))
        hit = hit || (s >> w & 1);
      dominating = hit;
    }
    if (independent && dominating)
      best = std::min<std::size_t>(best, std::popcount(s));
  }
  return best;
}

} // namespace

TEST(GraphTest, CanonicalizesOrientationAndOrder) {
  const Graph g = Graph::from_edges(4, {{3, 1}, {0, 2}, {1, 0}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 3}));
  EXPECT_EQ(g.edge_id(3, 1)->index, 2u);
  EXPECT_FALSE(g.edge_id(2, 3).has_value());
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(GraphTest, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), GraphError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), GraphError);
}

TEST(GraphTest, DegenerateGraphs) {
  const Graph empty(0), k1(1), e4(4);
  EXPECT_EQ(empty.size(), 0u);
  EXPECT_EQ(*diameter(empty), 0u);
  EXPECT_EQ(*diameter(k1), 0u);
  EXPECT_EQ(connected_components(k1).size(), 1u);
  EXPECT_EQ(independence_number(e4), 4u);
}

TEST(EdgeListTest, ParsesExamples) {
  const Graph k3 = parse_edge_list("3 3\n0 1\n1 2\n0 2\n");
  EXPECT_TRUE(is_complete(k3));
  EXPECT_EQ(k3.size(), 3u);
  const Graph e = parse_edge_list("2 1\n1 0");
  EXPECT_EQ(e.edges()[0], (Edge{0, 1}));
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("3 2\n0 1\n0 1\n"), 3u);  // duplicate
  EXPECT_EQ(line_of("3 2\n0 1\n1 1\n"), 3u);  // self-loop
  EXPECT_EQ(line_of("3 2\n0 1\n1 5\n"), 3u);  // out of range
  EXPECT_EQ(line_of("3 2\n0 1\nx y\n"), 3u);  // malformed
  EXPECT_EQ(line_of("3 2\n0 1 2\n"), 2u);     // too many tokens
  EXPECT_EQ(line_of("three 2\n"), 1u);        // malformed header
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError); // too few edges
}

TEST(EdgeListTest, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, 1 + i % 30, (i * 7) % 60);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  }
}

TEST(Graph6Test, HandDecodedStrings) {
  const Graph k3 = parse_graph6("Bw");
  EXPECT_EQ(k3.order(), 3u);
  EXPECT_TRUE(is_complete(k3));
  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.order(), 2u);
  EXPECT_EQ(k2.size(), 1u);
  EXPECT_EQ(to_graph6(parse_graph6("D?{")), "D?{");
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), k3);
}

TEST(Graph6Test, PetersenEncoding) {
  const Graph p = generate(family::Petersen{});
  // Relabel-free check: decode the standard string and compare invariants.
  const Graph q = parse_graph6("IheA@GUAo");
  EXPECT_EQ(q.order(), 10u);
  EXPECT_EQ(q.size(), 15u);
  for (Vertex v = 0; v < 10; ++v)
    EXPECT_EQ(q.degree(v), 3u);
  EXPECT_EQ(to_graph6(p), "IheA@GUAo");
}

TEST(Graph6Test, RejectsMalformed) {
  EXPECT_THROW(parse_graph6("B"), ParseError);     // truncated
  EXPECT_THROW(parse_graph6("Bww"), ParseError);   // trailing data
  EXPECT_THROW(parse_graph6("B\x01"), ParseError); // bad character
  EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(Graph6Test, RoundTripUpTo62AndBeyond) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {0u, 1u, 2u, 5u, 17u, 62u, 63u, 100u}) {
    const Graph g = random_graph(rng, n, n * 2);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g) << n;
  }
}

TEST(Graph6Test, CorpusHasExpectedClassCounts) {
  std::map<std::size_t, std::size_t> by_n;
  for (const Graph &g : connected_corpus()) {
    EXPECT_TRUE(is_connected(g));
    ++by_n[g.order()];
  }
  // Connected graphs up to isomorphism: OEIS A001349.
  const std::map<std::size_t, std::size_t> expected{{1, 1}, {2, 1}, {3, 2}, {4, 6},
                                                    {5, 21}, {6, 112}, {7, 853}};
  EXPECT_EQ(by_n, expected);
}

TEST(AlgorithmsTest, Diameter) {
  for (std::size_t n = 2; n <= 20; ++n)
    EXPECT_EQ(*diameter(path(n)), n - 1);
  EXPECT_EQ(*diameter(generate(family::Complete{4})), 1u);
  EXPECT_FALSE(diameter(Graph::from_edges(4, {{0, 1}, {2, 3}})).has_value());
  EXPECT_EQ(*diameter(generate(family::Petersen{})), 2u);
}

TEST(AlgorithmsTest, CliqueExamples) {
  EXPECT_EQ(max_clique_size(generate(family::Petersen{})), 2u);
  EXPECT_EQ(max_clique_size(generate(family::Complete{5})), 5u);
  EXPECT_EQ(max_clique_size(cycle(6)), 2u);
  EXPECT_EQ(max_clique_size(Graph(3)), 1u);
}

TEST(AlgorithmsTest, IndependenceExamples) {
  EXPECT_EQ(independence_number(cycle(5)), 2u);
  EXPECT_EQ(independence_number(generate(family::CompleteBipartite{3, 4})), 4u);
  EXPECT_EQ(independence_number(Graph(4)), 4u);
}

TEST(AlgorithmsTest, IndependentDominationExamples) {
  EXPECT_EQ(independent_domination_number(generate(family::Star{5})), 1u);
  EXPECT_EQ(independent_domination_number(cycle(4)), 2u);
  EXPECT_EQ(independent_domination_number(generate(family::Complete{4})), 1u);
}

TEST(AlgorithmsTest, ExactSearchesMatchSubsetEnumeration) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 1 + i % 9;
    const Graph g = random_graph(rng, n, (i * 5) % (n * (n - 1) / 2 + 1));
    const std::size_t alpha = independence_number(g);
    EXPECT_EQ(alpha, brute_alpha(g));
    EXPECT_EQ(max_clique_size(g), brute_omega(g));
    EXPECT_EQ(alpha, max_clique_size(complement(g)));
    const std::size_t idom = independent_domination_number(g);
    EXPECT_EQ(idom, brute_idom(g));
    EXPECT_LE(idom, alpha);
  }
}

TEST(AlgorithmsTest, Bipartition) {
  auto c6 = bipartition(cycle(6));
  ASSERT_TRUE(c6.parts);
  EXPECT_EQ(c6.parts->first.size(), 3u);
  EXPECT_EQ(c6.parts->second.size(), 3u);

  const Graph c5 = cycle(5);
  auto odd = bipartition(c5);
  EXPECT_FALSE(odd.parts);
  ASSERT_EQ(odd.odd_cycle.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_TRUE(c5.adjacent(odd.odd_cycle[i], odd.odd_cycle[(i + 1) % 5]));

  auto k23 = bipartition(generate(family::CompleteBipartite{2, 3}));
  ASSERT_TRUE(k23.parts);
  std::vector<std::size_t> sizes{k23.parts->first.size(), k23.parts->second.size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 3}));

  auto with_isolated = bipartition(Graph::from_edges(3, {{1, 2}}));
  ASSERT_TRUE(with_isolated.parts);
  EXPECT_EQ(with_isolated.parts->first.front(), 0u);
}

TEST(AlgorithmsTest, OddCycleWitnessIsACycle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 8, 12);
    auto b = bipartition(g);
    if (b.parts) {
      for (const Edge &e : g.edges()) {
        const bool u_first = std::count(b.parts->first.begin(), b.parts->first.end(), e.u) > 0;
        const bool v_first = std::count(b.parts->first.begin(), b.parts->first.end(), e.v) > 0;
        EXPECT_NE(u_first, v_first);
      }
      continue;
    }
    const auto &cyc = b.odd_cycle;
    ASSERT_EQ(cyc.size() % 2, 1u);
    std::set<Vertex> distinct(cyc.begin(), cyc.end());
    EXPECT_EQ(distinct.size(), cyc.size());
    for (std::size_t k = 0; k < cyc.size(); ++k)
      EXPECT_TRUE(g.adjacent(cyc[k], cyc[(k + 1) % cyc.size()]));
  }
}

TEST(AlgorithmsTest, SquareExamples) {
  const Graph p4sq = square(path(4));
  EXPECT_EQ(p4sq, Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}}));
  EXPECT_EQ(square(generate(family::Complete{3})), generate(family::Complete{3}));
  EXPECT_TRUE(is_complete(square(cycle(5))));
}

TEST(AlgorithmsTest, SquareContainsOriginalAndMatchesDistances) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_graph(rng, 9, 10);
    const Graph sq = square(g);
    for (const Edge &e : g.edges())
      EXPECT_TRUE(sq.adjacent(e.u, e.v));
    for (Vertex u = 0; u < g.order(); ++u) {
      auto d = distances_from(g, u);
      for (Vertex v = 0; v < g.order(); ++v)
        if (u != v) {
          EXPECT_EQ(sq.adjacent(u, v), d[v] && *d[v] <= 2);
        }
    }
  }
}

TEST(AlgorithmsTest, Components) {
  const Graph g = disjoint_union(path(3), path(2));
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].size(), 3u);
  EXPECT_EQ(comps[1].size(), 2u);
  EXPECT_EQ(connected_components(generate(family::Grid{3, 3})).size(), 1u);
}

TEST(AlgorithmsTest, StructuralPredicates) {
  EXPECT_TRUE(is_tree(path(5)));
  EXPECT_TRUE(is_forest(disjoint_union(path(3), path(4))));
  EXPECT_FALSE(is_tree(disjoint_union(path(3), path(4))));
  EXPECT_TRUE(is_unicyclic(generate(family::Aleph{})));
  EXPECT_FALSE(is_unicyclic(generate(family::Complete{4})));
  EXPECT_EQ(unicyclic_cycle_length(generate(family::Aleph{})), 4u);
}
