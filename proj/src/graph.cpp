#include "gcx/graph.hpp"

#include <algorithm>
#include <functional>

namespace gcx {

Graph::Builder::Builder(int n, std::string label) : n_(n), label_(std::move(label)) {
  if (n < 0) fail(ErrorKind::BadParameter, "negative order");
  if (n > kMaxOrder) fail(ErrorKind::TooLarge, "order " + std::to_string(n));
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<size_t>(n) * words_, 0);
}

Graph::Builder& Graph::Builder::add_edge(int u, int v) {
  if (u == v) fail(ErrorKind::SelfLoop, "loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    fail(ErrorKind::InvalidEdge,
         "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for order " +
             std::to_string(n_));
  bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
  return *this;
}

bool Graph::Builder::has_edge(int u, int v) const {
  return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
}

Graph::Builder& Graph::Builder::remove_edge(int u, int v) {
  bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
  bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(1ull << (u & 63));
  return *this;
}

Graph Graph::Builder::build() && {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.bits_ = std::move(bits_);
  g.label_ = std::move(label_);
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges, std::string label) {
  Builder b(n, std::move(label));
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < n_; ++v)
    for_each_neighbor(v, [&](int u) {
      if (v < u) out.emplace_back(v, u);
    });
  return out;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges, std::string label) {
  return Graph::from_edges(n, edges, std::move(label));
}

int degree(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    fail(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  return g.degree_of(v);
}

namespace {

// Word-parallel BFS; returns number of reached vertices, distances in dist
// (0xffff for unreached).
int bfs_impl(const Graph& g, int src, std::vector<std::uint16_t>& dist) {
  const int n = g.order();
  const int words = g.words_per_row();
  dist.assign(n, 0xffff);
  dist[src] = 0;
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
  visited[src >> 6] |= 1ull << (src & 63);
  frontier = visited;
  int reached = 1;
  std::uint16_t level = 0;
  for (;;) {
    ++level;
    std::fill(next.begin(), next.end(), 0);
    bool any_frontier = false;
    for (int w = 0; w < words; ++w) {
      std::uint64_t m = frontier[w];
      while (m) {
        int v = (w << 6) + std::countr_zero(m);
        m &= m - 1;
        auto r = g.row(v);
        for (int k = 0; k < words; ++k) next[k] |= r[k];
      }
    }
    for (int w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      if (next[w]) {
        any_frontier = true;
        std::uint64_t m = next[w];
        while (m) {
          int v = (w << 6) + std::countr_zero(m);
          m &= m - 1;
          dist[v] = level;
          ++reached;
        }
      }
    }
    if (!any_frontier) break;
    frontier.swap(next);
  }
  return reached;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) fail(ErrorKind::EmptyGraph, "connectivity of the empty graph");
  std::vector<std::uint16_t> dist;
  return bfs_impl(g, 0, dist) == g.order();
}

std::vector<std::uint16_t> bfs_distances(const Graph& g, int src) {
  if (g.order() == 0) fail(ErrorKind::EmptyGraph, "BFS on the empty graph");
  if (src < 0 || src >= g.order())
    fail(ErrorKind::VertexOutOfRange, "source " + std::to_string(src));
  std::vector<std::uint16_t> dist;
  if (bfs_impl(g, src, dist) != g.order())
    fail(ErrorKind::Disconnected, "BFS did not reach every vertex");
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  if (g.order() == 0) fail(ErrorKind::EmptyGraph, "distances of the empty graph");
  const int n = g.order();
  DistanceMatrix m;
  m.n = n;
  m.d.resize(static_cast<size_t>(n) * n);
  std::vector<std::uint16_t> dist;
  for (int v = 0; v < n; ++v) {
    if (bfs_impl(g, v, dist) != n)
      fail(ErrorKind::Disconnected, "graph is not connected");
    std::copy(dist.begin(), dist.end(), m.d.begin() + static_cast<size_t>(v) * n);
  }
  return m;
}

bool is_biconnected(const Graph& g) {
  const int n = g.order();
  if (n < 3) fail(ErrorKind::TooSmall, "biconnectivity needs order >= 3");
  if (!is_connected(g)) fail(ErrorKind::Disconnected, "biconnectivity of a disconnected graph");

  // DFS low-points; any articulation vertex disqualifies.
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  bool has_articulation = false;
  std::function<void(int, int)> dfs = [&](int v, int par) {
    disc[v] = low[v] = timer++;
    int children = 0;
    g.for_each_neighbor(v, [&](int u) {
      if (disc[u] == -1) {
        ++children;
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (par != -1 && low[u] >= disc[v]) has_articulation = true;
      } else if (u != par) {
        low[v] = std::min(low[v], disc[u]);
      }
    });
    if (par == -1 && children > 1) has_articulation = true;
  };
  dfs(0, -1);
  return !has_articulation;
}

bool is_tree(const Graph& g) {
  if (g.order() == 0) return false;
  std::vector<std::uint16_t> dist;
  if (bfs_impl(g, 0, dist) != g.order()) return false;
  return g.edge_count() == g.order() - 1;
}

}  // namespace gcx
