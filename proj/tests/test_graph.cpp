#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "defdom/graph.hpp"
#include "defdom/graph_io.hpp"
#include "oracles.hpp"

using namespace defdom;

TEST(ClosedNeighborhood, Examples) {
  EXPECT_EQ(closed_neighborhood(complete_graph(3), VertexSet{1}), (VertexSet{1, 2, 3}));
  EXPECT_EQ(closed_neighborhood(path_graph(3), VertexSet{1}), (VertexSet{1, 2}));
  EXPECT_TRUE(closed_neighborhood(petersen_graph(), VertexSet{}).empty());
  EXPECT_THROW(closed_neighborhood(path_graph(3), VertexSet{4}), InputError);
}

TEST(CountIn, Examples) {
  VertexMultiset d;
  d.add(1, 2);
  d.add(2, 1);
  EXPECT_EQ(count_in(d, VertexSet{1}), 2);
  EXPECT_EQ(count_in(d, VertexSet{3}), 0);
  EXPECT_EQ(count_in(d, VertexSet{1, 2}), 3);
}

TEST(HasClique, Examples) {
  auto w = find_clique(complete_graph(4), 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (VertexSet{1, 2, 3, 4}));
  EXPECT_FALSE(has_clique(cycle_graph(5), 3));
  // Oracle: every triple of the Petersen graph.
  ASSERT_FALSE(oracle::has_clique(petersen_graph(), 3));
  EXPECT_FALSE(has_clique(petersen_graph(), 3));
  EXPECT_TRUE(has_clique(petersen_graph(), 2));
}

TEST(DeleteVertices, Examples) {
  auto k2 = delete_vertices(complete_graph(3), VertexSet{2});
  EXPECT_EQ(k2.graph.n(), 2);
  EXPECT_EQ(k2.graph.edge_count(), 1u);
  auto same = delete_vertices(petersen_graph(), VertexSet{});
  EXPECT_EQ(same.graph.edges(), petersen_graph().edges());
  // P4 minus {2}: survivors 1, 3, 4 renumbered 1, 2, 3; only edge 3-4 remains.
  auto p = delete_vertices(path_graph(4), VertexSet{2});
  ASSERT_EQ(p.graph.n(), 3);
  auto edges = p.graph.edges();
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(p.original[edges[0].first], 3);
  EXPECT_EQ(p.original[edges[0].second], 4);
  EXPECT_THROW(delete_vertices(path_graph(4), VertexSet{9}), InputError);
}

TEST(Generators, Shapes) {
  auto s = star_graph(3);
  EXPECT_EQ(s.n(), 4);
  EXPECT_EQ(s.edge_count(), 3u);
  for (Vertex v = 2; v <= 4; ++v) EXPECT_TRUE(s.adjacent(1, v));
  EXPECT_EQ(complete_graph(4).edge_count(), 6u);
  EXPECT_EQ(random_graph(10, 0.5, 7).edges(), random_graph(10, 0.5, 7).edges());
  EXPECT_EQ(petersen_graph().edge_count(), 15u);
}

TEST(GraphIo, RoundTripWithLabelsAndParams) {
  Graph g(3, std::vector<Edge>{{1, 2}, {2, 3}});
  g.set_labels({"a", "b", "c"});
  std::stringstream ss;
  write_graph(ss, g, {{"k", 2}, {"ell", 5}});
  auto back = read_graph(ss);
  EXPECT_EQ(back.graph.edges(), g.edges());
  EXPECT_EQ(back.graph.label(2), "b");
  EXPECT_EQ(back.params.at("k"), 2);
  EXPECT_EQ(back.params.at("ell"), 5);
}

TEST(GraphIo, RejectsMalformedInput) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  };
  EXPECT_THROW(parse("p dds 3 1\ne 2 1\n"), InputError);
  EXPECT_THROW(parse("p dds 3 2\ne 1 2\n"), InputError);
  EXPECT_THROW(parse("e 1 2\n"), InputError);
  EXPECT_THROW(parse("p dds 2 1\ne 1 3\n"), InputError);
  EXPECT_THROW(parse("p dds 2 2\ne 1 2\ne 1 2\n"), InputError);
  EXPECT_THROW(parse("c role 1 a\np dds 2 0\n"), InputError);
  EXPECT_NO_THROW(parse("c hello\np dds 2 1\ne 1 2\n"));
}

TEST(VertexFiles, SetAndMultiset) {
  std::istringstream set_in("3\n1\n");
  EXPECT_EQ(read_vertex_set(set_in), (VertexSet{1, 3}));
  std::istringstream dup("1\n1\n");
  EXPECT_THROW(read_vertex_set(dup), InputError);
  std::istringstream ms("2 3\n1\n");
  auto d = read_vertex_multiset(ms);
  EXPECT_EQ(d.count(2), 3);
  EXPECT_EQ(d.count(1), 1);
  std::istringstream strict("1\n");
  EXPECT_THROW(read_vertex_multiset(strict, true), InputError);
  std::istringstream zero("1 0\n");
  EXPECT_THROW(read_vertex_multiset(zero), InputError);
}

TEST(GraphProperties, NeighborhoodTwoWays) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    int n = 1 + static_cast<int>(rng() % 12);
    auto g = random_graph(n, 0.3, rng());
    std::vector<Vertex> s;
    for (Vertex v = 1; v <= n; ++v)
      if (rng() % 3 == 0) s.push_back(v);
    std::vector<char> mark(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v : s) mark[v] = 1;
    for (auto [u, v] : g.edges()) {
      if (std::find(s.begin(), s.end(), u) != s.end()) mark[v] = 1;
      if (std::find(s.begin(), s.end(), v) != s.end()) mark[u] = 1;
    }
    VertexSet scan;
    for (Vertex v = 1; v <= n; ++v)
      if (mark[v]) scan.push_back(v);
    EXPECT_EQ(closed_neighborhood(g, s), scan);
  }
}

TEST(GraphProperties, CliqueAgreesWithEnumeration) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 150; ++round) {
    int n = 1 + static_cast<int>(rng() % 12);
    double p = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    auto g = random_graph(n, p, rng());
    int t = 1 + static_cast<int>(rng() % 5);
    auto w = find_clique(g, t);
    ASSERT_EQ(w.has_value(), oracle::has_clique(g, t)) << "n=" << n << " t=" << t;
    if (w) {
      EXPECT_EQ(static_cast<int>(w->size()), t);
      EXPECT_TRUE(is_clique(g, *w));
    }
  }
}

TEST(GraphProperties, DeletionNeverCreatesCliques) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 60; ++round) {
    auto g = random_graph(10, 0.6, rng());
    std::vector<Vertex> x;
    for (int t = 2; t <= 5; ++t) {
      bool before = has_clique(delete_vertices(g, make_set(x)).graph, t);
      x.push_back(1 + static_cast<Vertex>(rng() % 10));
      bool after = has_clique(delete_vertices(g, make_set(x)).graph, t);
      EXPECT_TRUE(before || !after);
    }
  }
}
