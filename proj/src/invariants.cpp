#include "gcx/invariants.hpp"

#include <algorithm>

namespace gcx {

namespace {

// One BFS per vertex; accumulates tr/ec without materializing the matrix.
// Single-word specialization covers the enumeration hot path (n <= 64).
void sweep_word(const Graph& g, InvariantProfile& p) {
  const int n = g.order();
  const std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = g.row(v)[0];
  for (int s = 0; s < n; ++s) {
    std::uint64_t visited = 1ull << s;
    std::uint64_t frontier = visited;
    std::uint32_t tr = 0;
    std::uint16_t level = 0;
    while (visited != all) {
      std::uint64_t next = 0;
      std::uint64_t m = frontier;
      while (m) {
        next |= rows[std::countr_zero(m)];
        m &= m - 1;
      }
      next &= ~visited;
      if (!next) fail(ErrorKind::Disconnected, "graph is not connected");
      ++level;
      visited |= next;
      tr += static_cast<std::uint32_t>(level) * std::popcount(next);
      frontier = next;
    }
    p.tr[s] = tr;
    p.ec[s] = level;
  }
}

void sweep_wide(const Graph& g, InvariantProfile& p) {
  const int n = g.order();
  for (int s = 0; s < n; ++s) {
    auto dist = bfs_distances(g, s);
    std::uint32_t tr = 0;
    std::uint16_t ecc = 0;
    for (int v = 0; v < n; ++v) {
      tr += dist[v];
      ecc = std::max(ecc, dist[v]);
    }
    p.tr[s] = tr;
    p.ec[s] = ecc;
  }
}

}  // namespace

InvariantProfile profile(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(ErrorKind::EmptyGraph, "profile of the empty graph");
  InvariantProfile p;
  p.n = n;
  p.tr.resize(n);
  p.ec.resize(n);
  if (g.words_per_row() == 1)
    sweep_word(g, p);
  else
    sweep_wide(g, p);

  std::uint64_t tr_sum = 0;
  for (int v = 0; v < n; ++v) tr_sum += p.tr[v];
  p.wiener = tr_sum / 2;

  p.tr_set = p.tr;
  std::sort(p.tr_set.begin(), p.tr_set.end());
  p.tr_set.erase(std::unique(p.tr_set.begin(), p.tr_set.end()), p.tr_set.end());
  p.ec_set = p.ec;
  std::sort(p.ec_set.begin(), p.ec_set.end());
  p.ec_set.erase(std::unique(p.ec_set.begin(), p.ec_set.end()), p.ec_set.end());

  p.c_w = static_cast<int>(p.tr_set.size());
  p.c_ec = static_cast<int>(p.ec_set.size());
  p.rad = p.ec_set.front();
  p.diam = p.ec_set.back();
  for (int v = 0; v < n; ++v)
    if (p.ec[v] == p.rad) p.center.push_back(v);
  return p;
}

std::vector<std::vector<int>> distance_levels(const Graph& g) {
  InvariantProfile p = profile(g);
  const int n = g.order();

  // Multi-source BFS from the center.
  std::vector<int> level(n, -1);
  std::vector<int> frontier = p.center;
  for (int v : frontier) level[v] = 0;
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<int> next;
    for (int v : frontier)
      g.for_each_neighbor(v, [&](int u) {
        if (level[u] == -1) {
          level[u] = depth;
          next.push_back(u);
        }
      });
    frontier = std::move(next);
  }
  int max_level = *std::max_element(level.begin(), level.end());
  std::vector<std::vector<int>> out(max_level + 1);
  for (int v = 0; v < n; ++v) out[level[v]].push_back(v);
  return out;
}

std::vector<int> eccentric_set(const Graph& g, int w) {
  if (w < 0 || w >= g.order())
    fail(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(w));
  auto dist = bfs_distances(g, w);
  std::uint16_t ecc = 0;
  for (auto d : dist) ecc = std::max(ecc, d);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (dist[v] == ecc) out.push_back(v);
  return out;
}

}  // namespace gcx
