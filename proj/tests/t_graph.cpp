#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gcx/construct.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/graph.hpp"
#include "gcx/verify.hpp"
#include "oracles.hpp"

using namespace gcx;

namespace {
Graph fig_tree(int n) {
  // path 0..n-2 plus a pendant on vertex 2
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 2 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(2, n - 1);
  return build_graph(n, edges);
}
}  // namespace

TEST_CASE("build_graph basics and errors") {
  Graph k1 = build_graph(1, std::vector<std::pair<int, int>>{});
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);

  Graph k3 = build_graph(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
  for (int v = 0; v < 3; ++v) CHECK(degree(k3, v) == 2);

  // duplicate edges collapse
  Graph dup = build_graph(2, std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);

  Graph t6 = fig_tree(6);
  CHECK(t6.order() == 6);
  CHECK(degree(t6, 2) == 3);
  Graph t7 = fig_tree(7);
  CHECK(degree(t7, 2) == 3);
  CHECK(is_tree(t7));

  CHECK_THROWS_WITH_AS(build_graph(3, std::vector<std::pair<int, int>>{{0, 3}}), doctest::Contains("InvalidEdge"),
                       Error);
  CHECK_THROWS_AS(build_graph(3, std::vector<std::pair<int, int>>{{1, 1}}), Error);
  try {
    build_graph(3, std::vector<std::pair<int, int>>{{1, 1}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SelfLoop);
  }
}

TEST_CASE("degree examples") {
  Graph k4 = complete_graph(4);
  for (int v = 0; v < 4; ++v) CHECK(degree(k4, v) == 3);
  CHECK(degree(paw_graph(), 0) == 3);  // apex
  Graph c6 = cycle_graph(6);
  for (int v = 0; v < 6; ++v) CHECK(degree(c6, v) == 2);
  CHECK_THROWS_AS(degree(c6, 6), Error);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(build_graph(1, std::vector<std::pair<int, int>>{})));
  Graph two_edges = build_graph(4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_edges));
  Graph z1 = z_graph(1);
  CHECK(is_connected(z1));
  auto fw = oracle::floyd_warshall(z1);
  for (int v = 0; v < z1.order(); ++v) CHECK(fw[0][v] < (1 << 28));
  CHECK_THROWS_AS(is_connected(Graph{}), Error);
}

TEST_CASE("bfs_distances") {
  auto d = bfs_distances(path_graph(3), 0);
  CHECK(d == std::vector<std::uint16_t>{0, 1, 2});

  auto dc = bfs_distances(cycle_graph(6), 2);
  std::vector<int> sorted(dc.begin(), dc.end());
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 1, 2, 2, 3});

  auto dt = bfs_distances(fig_tree(7), 0);
  CHECK(std::accumulate(dt.begin(), dt.end(), 0) == 18);

  CHECK_THROWS_AS(bfs_distances(build_graph(4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}}), 0),
                  Error);
  CHECK_THROWS_AS(bfs_distances(path_graph(3), 5), Error);
}

TEST_CASE("bfs matches Floyd-Warshall on families") {
  std::vector<Graph> graphs;
  graphs.push_back(z_graph(2));
  graphs.push_back(paw_graph());
  graphs.push_back(hypercube(4));
  graphs.push_back(corpus::interval8());
  graphs.push_back(center_regular_tree(std::vector<int>{2, 3}, true));
  for (const auto& g : graphs) {
    auto fw = oracle::floyd_warshall(g);
    auto m = all_pairs_distances(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) CHECK(m.at(u, v) == fw[u][v]);
  }
}

TEST_CASE("all_pairs_distances examples") {
  auto mk = all_pairs_distances(complete_graph(5));
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) CHECK(mk.at(u, v) == (u == v ? 0 : 1));

  auto mp = all_pairs_distances(path_graph(4));
  int mx = 0;
  for (auto d : mp.d) mx = std::max<int>(mx, d);
  CHECK(mx == 3);

  // hypercube distances are Hamming distances
  auto mq = all_pairs_distances(hypercube(3));
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) CHECK(mq.at(u, v) == std::popcount(unsigned(u ^ v)));
}

TEST_CASE("distance matrix invariants over the small corpus") {
  for (int n = 1; n <= 6; ++n) {
    GeneratorConfig cfg;
    cfg.n = n;
    ConnectedGraphGenerator gen(cfg);
    Graph g;
    while (gen.next(g)) {
      auto m = all_pairs_distances(g);
      for (int u = 0; u < n; ++u) {
        CHECK(m.at(u, u) == 0);
        for (int v = 0; v < n; ++v) {
          CHECK(m.at(u, v) == m.at(v, u));
          if (u != v) CHECK(m.at(u, v) >= 1);
          CHECK((m.at(u, v) == 1) == g.has_edge(u, v));
          for (int w = 0; w < n; ++w) CHECK(m.at(u, w) <= m.at(u, v) + m.at(v, w));
        }
      }
      long long degsum = 0;
      for (int v = 0; v < n; ++v) degsum += g.degree_of(v);
      CHECK(g.edge_count() == degsum / 2);
    }
  }
  // sampled larger orders
  for (int n = 7; n <= 9; ++n) {
    GeneratorConfig cfg;
    cfg.n = n;
    ConnectedGraphGenerator gen(cfg);
    Graph g;
    std::uint64_t i = 0;
    while (gen.next(g)) {
      if (i++ % 97 != 0) continue;
      auto m = all_pairs_distances(g);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          CHECK(m.at(u, v) == m.at(v, u));
          for (int w = 0; w < n; ++w) CHECK(m.at(u, w) <= m.at(u, v) + m.at(v, w));
        }
    }
  }
}

TEST_CASE("is_biconnected") {
  CHECK(is_biconnected(cycle_graph(5)));
  CHECK_FALSE(is_biconnected(path_graph(5)));
  CHECK_FALSE(is_biconnected(star_graph(3)));
  CHECK(is_biconnected(corpus::indivisible11()));
  CHECK(is_biconnected(complete_graph(3)));
  CHECK_THROWS_AS(is_biconnected(complete_graph(2)), Error);
  CHECK_THROWS_AS(is_biconnected(build_graph(4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}})),
                  Error);
}

TEST_CASE("is_tree") {
  CHECK(is_tree(path_graph(5)));
  CHECK_FALSE(is_tree(cycle_graph(4)));
  CHECK(is_tree(fig_tree(7)));
  CHECK(is_tree(build_graph(1, std::vector<std::pair<int, int>>{})));
  CHECK_FALSE(is_tree(build_graph(4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}})));
}

TEST_CASE("bfs symmetry property") {
  std::vector<Graph> graphs = {z_graph(3), corpus::interval7(), hypercube(3)};
  for (const auto& g : graphs) {
    std::vector<std::vector<std::uint16_t>> rows;
    for (int v = 0; v < g.order(); ++v) rows.push_back(bfs_distances(g, v));
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) CHECK(rows[u][v] == rows[v][u]);
  }
}
