#include <gtest/gtest.h>

#include <random>

#include "griddom/generators.hpp"
#include "griddom/grid.hpp"

namespace griddom {
namespace {

TEST(Vertex, Ordering) {
  EXPECT_LT((Vertex{1, 2}), (Vertex{2, 1}));
  EXPECT_LT((Vertex{2, 1}), (Vertex{2, 3}));
}

TEST(Edge, CanonicalAndValidated) {
  Edge e({2, 1}, {1, 1});
  EXPECT_EQ(e.a, (Vertex{1, 1}));
  EXPECT_EQ(e.b, (Vertex{2, 1}));
  EXPECT_TRUE(e.vertical());
  EXPECT_THROW(Edge({1, 1}, {2, 2}), domain_error);
  EXPECT_THROW(Edge({1, 1}, {1, 1}), domain_error);
  EXPECT_THROW(Edge({1, 1}, {1, 3}), domain_error);
}

TEST(GridSpec, Validation) {
  EXPECT_THROW(GridSpec(0, 3), domain_error);
  EXPECT_THROW(GridSpec(3, 0), domain_error);
  EXPECT_THROW(GridSpec(2, 2, {Edge({1, 2}, {1, 3})}), domain_error);
  GridSpec g(2, 2, {Edge({1, 1}, {1, 2})});
  EXPECT_FALSE(g.has_edge({1, 1}, {1, 2}));
  EXPECT_TRUE(g.has_edge({1, 1}, {2, 1}));
  EXPECT_FALSE(g.has_edge({1, 1}, {2, 2}));
}

TEST(Neighbors, CornerInteriorAndDeletion) {
  GridSpec g34(3, 4);
  EXPECT_EQ(neighbors(g34, {1, 1}), (std::vector<Vertex>{{1, 2}, {2, 1}}));

  GridSpec g33(3, 3);
  EXPECT_EQ(neighbors(g33, {2, 2}),
            (std::vector<Vertex>{{1, 2}, {2, 1}, {2, 3}, {3, 2}}));

  GridSpec cut(3, 4, {Edge({1, 1}, {1, 2})});
  EXPECT_EQ(neighbors(cut, {1, 1}), (std::vector<Vertex>{{2, 1}}));

  EXPECT_THROW(neighbors(g33, {0, 1}), domain_error);
  EXPECT_THROW(neighbors(g33, {1, 4}), domain_error);
}

TEST(EdgeSetOp, Counts) {
  EXPECT_EQ(edge_set(GridSpec(2, 2)).size(), 4u);
  EXPECT_EQ(edge_set(GridSpec(4, 20)).size(), 136u);
  EXPECT_TRUE(edge_set(GridSpec(1, 1)).empty());
  GridSpec g(2, 2, {Edge({1, 1}, {1, 2})});
  EXPECT_EQ(edge_set(g).size(), 3u);
  EXPECT_EQ(edge_set(g).count(Edge({1, 1}, {1, 2})), 0u);
}

TEST(Domination, Examples) {
  EXPECT_TRUE(is_p_dominating(GridSpec(2, 2), {{1, 1}, {2, 2}}, 2));
  EXPECT_TRUE(
      is_p_dominating(GridSpec(3, 3), {{2, 1}, {1, 2}, {3, 2}, {2, 3}}, 2));

  const DominationCheck bad = check_p_dominating(GridSpec(2, 2), {{1, 1}}, 2);
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.failing.has_value());
  EXPECT_EQ(*bad.failing, (Vertex{1, 2}));  // first failing cell in scan order

  VertexSet everything;
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 4; ++c) everything.insert({r, c});
  EXPECT_TRUE(is_p_dominating(GridSpec(3, 4), everything, 7));

  EXPECT_THROW(is_p_dominating(GridSpec(2, 2), {{5, 5}}, 2), domain_error);
  EXPECT_THROW(is_p_dominating(GridSpec(2, 2), {}, 0), domain_error);
}

TEST(ColumnStatsOp, Examples) {
  // blacks of the 3x5 two-block strip
  const VertexSet D = {{2, 1}, {1, 2}, {3, 2}, {2, 3}, {2, 4}, {1, 5}, {3, 5}};
  ColumnStats s = column_stats(GridSpec(3, 5), D);
  EXPECT_EQ(s.c, (std::vector<int>{1, 2, 1, 1, 2}));
  EXPECT_EQ(s.histogram, (std::vector<int>{0, 3, 2, 0}));

  s = column_stats(GridSpec(2, 4), {});
  EXPECT_EQ(s.c, (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(s.histogram, (std::vector<int>{4, 0, 0}));

  s = column_stats(GridSpec(2, 3), {{1, 1}, {2, 1}, {1, 3}, {2, 3}});
  EXPECT_EQ(s.c, (std::vector<int>{2, 0, 2}));
  EXPECT_EQ(s.histogram, (std::vector<int>{1, 0, 2}));
}

TEST(ColumnStatsOp, Identities) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 8);
    VertexSet D;
    for (int r = 1; r <= m; ++r)
      for (int c = 1; c <= n; ++c)
        if (rng() % 3 == 0) D.insert({r, c});
    const ColumnStats s = column_stats(GridSpec(m, n), D);
    int total = 0, cols = 0, weighted = 0;
    for (int x : s.c) total += x;
    for (int i = 0; i <= m; ++i) {
      cols += s.histogram[i];
      weighted += i * s.histogram[i];
    }
    EXPECT_EQ(total, static_cast<int>(D.size()));
    EXPECT_EQ(cols, n);
    EXPECT_EQ(weighted, static_cast<int>(D.size()));
  }
}

TEST(Normalize, ShiftsIntoEmptyColumn) {
  GridSpec g(2, 3);
  const VertexSet D = {{1, 1}, {2, 1}, {1, 3}, {2, 3}};
  EXPECT_EQ(normalize_no_empty_columns(g, D),
            (VertexSet{{2, 1}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST(Normalize, IdentityWhenNoEmptyColumn) {
  GridSpec g(3, 3);
  const VertexSet D = {{2, 1}, {1, 2}, {3, 2}, {2, 3}};
  EXPECT_EQ(normalize_no_empty_columns(g, D), D);
}

TEST(Normalize, FullFlanksCase) {
  GridSpec g(3, 3);
  VertexSet D;
  for (int r = 1; r <= 3; ++r) {
    D.insert({r, 1});
    D.insert({r, 3});
  }
  const VertexSet out = normalize_no_empty_columns(g, D);
  EXPECT_EQ(out.size(), 6u);
  EXPECT_TRUE(is_p_dominating(g, out, 2));
  EXPECT_EQ(column_stats(g, out).histogram[0], 0);
}

TEST(Normalize, Errors) {
  GridSpec g(2, 3);
  EXPECT_THROW(normalize_no_empty_columns(g, {{1, 1}}), domain_error);
  GridSpec cut(2, 2, {Edge({1, 1}, {1, 2})});
  EXPECT_THROW(
      normalize_no_empty_columns(cut, {{1, 1}, {2, 1}, {1, 2}, {2, 2}}),
      domain_error);
  // a one-row grid cannot absorb an empty column
  GridSpec path(1, 3);
  EXPECT_THROW(normalize_no_empty_columns(path, {{1, 1}, {1, 3}}), domain_error);
}

TEST(Normalize, SeededInputs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int n = 3 + static_cast<int>(rng() % 6);
    GridSpec g(m, n);
    const VertexSet D = random_set_with_gaps(m, n, rng);
    ASSERT_TRUE(is_p_dominating(g, D, 2));
    const VertexSet out = normalize_no_empty_columns(g, D);
    EXPECT_EQ(out.size(), D.size());
    EXPECT_TRUE(is_p_dominating(g, out, 2));
    EXPECT_EQ(column_stats(g, out).histogram[0], 0);
  }
}

TEST(SymmetryOp, Examples) {
  GridSpec g(4, 9);
  EXPECT_EQ(apply_symmetry(g, {true, false}, Vertex{2, 5}), (Vertex{3, 5}));
  EXPECT_EQ(apply_symmetry(g, {false, true}, Edge({1, 1}, {1, 2})),
            Edge({1, 9}, {1, 8}));
  EXPECT_EQ(apply_symmetry(g, {false, false}, Vertex{2, 5}), (Vertex{2, 5}));
}

TEST(SymmetryOp, InvolutionAndDominationPreserved) {
  std::mt19937_64 rng(7);
  const Symmetry syms[4] = {{false, false}, {false, true}, {true, false}, {true, true}};
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int n = 2 + static_cast<int>(rng() % 6);
    GridSpec g0(m, n);
    const EdgeSet removed = random_removed_edges(g0, static_cast<int>(rng() % 3), rng);
    GridSpec g(m, n, removed);
    VertexSet D;
    for (int r = 1; r <= m; ++r)
      for (int c = 1; c <= n; ++c)
        if (rng() % 2 == 0) D.insert({r, c});
    for (const Symmetry& s : syms) {
      EXPECT_EQ(apply_symmetry(g, s, apply_symmetry(g, s, D)), D);
      const GridSpec gs = apply_symmetry(g, s);
      EXPECT_EQ(is_p_dominating(g, D, 2),
                is_p_dominating(gs, apply_symmetry(g, s, D), 2));
    }
  }
}

TEST(Render, Examples) {
  EXPECT_EQ(render_ascii(GridSpec(2, 2), {{1, 1}, {2, 2}}),
            "· ●\n● ·");
  EXPECT_EQ(render_ascii(GridSpec(3, 3), {{2, 1}, {1, 2}, {3, 2}, {2, 3}}),
            "· ● ·\n● · ●\n· ● ·");
  EXPECT_EQ(render_ascii(GridSpec(1, 2), {}), "· ·");
}

TEST(EdgeText, RoundTrip) {
  GridSpec g(3, 7);
  const std::string text = "1,1-2,1;2,1-3,1;1,3-1,4";
  const EdgeSet edges = parse_edge_list(text, g);
  EXPECT_EQ(edges.size(), 3u);
  EXPECT_EQ(format_edge_list(edges), "1,1-2,1;1,3-1,4;2,1-3,1");
  EXPECT_EQ(parse_edge_list(format_edge_list(edges), g), edges);
  EXPECT_TRUE(parse_edge_list("", g).empty());
  // reversed endpoints collapse to one canonical edge
  EXPECT_EQ(parse_edge_list("2,1-1,1;1,1-2,1", g).size(), 1u);

  EXPECT_THROW(parse_edge_list("1,1-2,2", g), domain_error);
  EXPECT_THROW(parse_edge_list("1,1-1,9", g), domain_error);
  EXPECT_THROW(parse_edge_list("1,1", g), domain_error);
  EXPECT_THROW(parse_edge_list("a,1-1,2", g), domain_error);
}

TEST(VertexText, RoundTrip) {
  GridSpec g(3, 4);
  const VertexSet vs = parse_vertex_list("2,1;1,2;3,2", g);
  EXPECT_EQ(vs, (VertexSet{{1, 2}, {2, 1}, {3, 2}}));
  EXPECT_EQ(format_vertex_list(vs), "1,2;2,1;3,2");
  EXPECT_THROW(parse_vertex_list("4,1", g), domain_error);
}

// two structural facts about 2-dominating sets, on seeded valid inputs
TEST(Properties, DegreeOneAndBoundaryColumns) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int n = 2 + static_cast<int>(rng() % 7);
    GridSpec g(m, n);
    const VertexSet D = random_set_with_gaps(m, n, rng);
    ASSERT_TRUE(is_p_dominating(g, D, 2));
    for (int r = 1; r <= m; ++r)
      for (int c = 1; c <= n; ++c)
        if (neighbors(g, {r, c}).size() == 1) EXPECT_TRUE(D.count({r, c}));
    const ColumnStats s = column_stats(g, D);
    EXPECT_GE(s.c.front(), (m + 2) / 3);
    EXPECT_GE(s.c.back(), (m + 2) / 3);
    const int n0 = s.histogram[0], nm = s.histogram[m];
    EXPECT_LE(n0, nm == 0 ? 0 : nm - 1);
  }
}

}  // namespace
}  // namespace griddom
