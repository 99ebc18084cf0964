#pragma once

// Test-only oracles. These deliberately avoid the library's BFS, canonical
// form and generator code paths so they can stand as independent witnesses.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gcx/graph.hpp"

namespace oracle {

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> floyd_warshall(const gcx::Graph& g) {
  const int n = g.order();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Edge masks over the C(n,2) pair bits; pair (i < j) uses bit j(j-1)/2 + i,
// the graph6 column-major layout.
inline int pair_bit(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

inline bool mask_has(std::uint32_t mask, int i, int j) {
  return (mask >> pair_bit(i, j)) & 1u;
}

inline bool mask_connected(int n, std::uint32_t mask) {
  if (n <= 0) return false;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if (!((frontier >> v) & 1u)) continue;
      for (int u = 0; u < n; ++u)
        if (u != v && mask_has(mask, u, v)) next |= 1u << u;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n >= 32 ? ~0u : ((1u << n) - 1));
}

// bit maps: new_mask bit map[b] takes old bit b, for each permutation.
inline std::vector<std::vector<int>> perm_bit_maps(int n,
                                                   std::vector<std::vector<int>>* perms_out) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> maps;
  do {
    std::vector<int> map(n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) map[pair_bit(i, j)] = pair_bit(perm[i], perm[j]);
    maps.push_back(std::move(map));
    if (perms_out) perms_out->push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

// True iff no permutation in maps sends mask to a smaller mask. The inverse
// map trick compares from the top bit down with early exit.
inline bool mask_is_minimal(std::uint32_t mask, int bits,
                            const std::vector<std::vector<int>>& inverse_maps) {
  for (const auto& inv : inverse_maps) {
    for (int b = bits - 1; b >= 0; --b) {
      std::uint32_t pb = (mask >> inv[b]) & 1u;
      std::uint32_t ob = (mask >> b) & 1u;
      if (pb != ob) {
        if (pb < ob) return false;
        break;
      }
    }
  }
  return true;
}

inline std::vector<std::vector<int>> invert_maps(const std::vector<std::vector<int>>& maps) {
  std::vector<std::vector<int>> out;
  out.reserve(maps.size());
  for (const auto& m : maps) {
    std::vector<int> inv(m.size());
    for (size_t b = 0; b < m.size(); ++b) inv[m[b]] = static_cast<int>(b);
    out.push_back(std::move(inv));
  }
  return out;
}

// Number of isomorphism classes of connected graphs of order n (n <= 7),
// counting lexicographically minimal representatives among all labeled
// connected graphs. A transposition-only prefilter keeps it fast.
inline long long count_connected_classes(int n) {
  const int bits = n * (n - 1) / 2;
  auto maps = perm_bit_maps(n, nullptr);
  auto inv_all = invert_maps(maps);
  // transposition prefilter
  std::vector<std::vector<int>> trans;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[a], perm[b]);
      std::vector<int> map(bits);
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) map[pair_bit(i, j)] = pair_bit(perm[i], perm[j]);
      trans.push_back(std::move(map));
    }
  auto inv_trans = invert_maps(trans);

  long long count = 0;
  const std::uint32_t top = bits >= 32 ? 0xffffffffu : ((1u << bits) - 1);
  for (std::uint32_t mask = 0;; ++mask) {
    if (mask_connected(n, mask) && mask_is_minimal(mask, bits, inv_trans) &&
        mask_is_minimal(mask, bits, inv_all))
      ++count;
    if (mask == top) break;
  }
  return count;
}

// Labeled trees from Pruefer sequences, as edge masks.
inline std::uint32_t prufer_to_mask(int n, const std::vector<int>& code) {
  std::vector<int> deg(n, 1);
  for (int c : code) ++deg[c];
  std::uint32_t mask = 0;
  std::uint32_t leaves = 0;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves |= 1u << v;
  for (int c : code) {
    int leaf = std::countr_zero(leaves);
    leaves &= leaves - 1;
    mask |= 1u << pair_bit(leaf, c);
    if (--deg[c] == 1) leaves |= 1u << c;
  }
  int a = std::countr_zero(leaves);
  leaves &= leaves - 1;
  int b = std::countr_zero(leaves);
  mask |= 1u << pair_bit(a, b);
  return mask;
}

// Number of isomorphism classes of free trees of order n (n <= 8) by minimal
// representatives among all labeled trees.
inline long long count_tree_classes(int n) {
  if (n == 1) return 1;
  if (n == 2) return 1;
  const int bits = n * (n - 1) / 2;
  auto maps = perm_bit_maps(n, nullptr);
  auto inv_all = invert_maps(maps);
  std::vector<std::vector<int>> trans;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[a], perm[b]);
      std::vector<int> map(bits);
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) map[pair_bit(i, j)] = pair_bit(perm[i], perm[j]);
      trans.push_back(std::move(map));
    }
  auto inv_trans = invert_maps(trans);

  long long count = 0;
  std::vector<int> code(n - 2, 0);
  for (;;) {
    std::uint32_t mask = prufer_to_mask(n, code);
    if (mask_is_minimal(mask, bits, inv_trans) && mask_is_minimal(mask, bits, inv_all)) ++count;
    int i = n - 3;
    while (i >= 0 && code[i] == n - 1) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
  return count;
}

// Orbit partition of the automorphism group by trying all permutations.
inline std::vector<int> automorphism_orbits(const gcx::Graph& g) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool auto_ok = true;
    for (int u = 0; u < n && auto_ok; ++u)
      for (int v = u + 1; v < n && auto_ok; ++v)
        if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) auto_ok = false;
    if (auto_ok)
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(perm[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> orbit(n);
  for (int v = 0; v < n; ++v) orbit[v] = find(v);
  return orbit;
}

// Exhaustive isomorphism test for small graphs.
inline bool isomorphic(const gcx::Graph& a, const gcx::Graph& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Canonical code of a free tree: rooted AHU encoding at the center (vertex
// or edge). Independent of the level-sequence generator.
inline std::string ahu_code(const gcx::Graph& t) {
  const int n = t.order();
  if (n == 1) return "()";
  auto d = floyd_warshall(t);
  std::vector<int> ec(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) ec[v] = std::max(ec[v], d[v][u]);
  int rad = *std::min_element(ec.begin(), ec.end());
  std::vector<int> center;
  for (int v = 0; v < n; ++v)
    if (ec[v] == rad) center.push_back(v);

  std::function<std::string(int, int)> encode = [&](int v, int parent) {
    std::vector<std::string> kids;
    t.for_each_neighbor(v, [&](int u) {
      if (u != parent) kids.push_back(encode(u, v));
    });
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ")";
    return out;
  };
  if (center.size() == 1) return "U" + encode(center[0], -1);
  std::string a = encode(center[0], center[1]);
  std::string b = encode(center[1], center[0]);
  if (b < a) std::swap(a, b);
  return "B" + a + b;
}

}  // namespace oracle
