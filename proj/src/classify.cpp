#include "gcx/classify.hpp"

#include <algorithm>

namespace gcx {

ClassificationReport classify(const Graph& g) { return classify(g, profile(g)); }

bool is_transmission_indivisible(const InvariantProfile& p) {
  // All transmissions pairwise distinct mod n.
  const unsigned n = static_cast<unsigned>(p.n);
  std::uint64_t seen[kMaxOrder / 64] = {};
  for (auto t : p.tr) {
    unsigned res = t % n;
    std::uint64_t& w = seen[res >> 6];
    const std::uint64_t bit = 1ull << (res & 63);
    if (w & bit) return false;
    w |= bit;
  }
  return true;
}

bool is_interval_irregular(const InvariantProfile& p) {
  return p.c_w == p.n &&
         p.tr_set.back() - p.tr_set.front() == static_cast<std::uint32_t>(p.n - 1);
}

std::optional<std::uint32_t> arithmetic_step(const InvariantProfile& p) {
  if (p.tr_set.size() == 1) return 0;
  std::uint32_t step = p.tr_set[1] - p.tr_set[0];
  for (size_t i = 2; i < p.tr_set.size(); ++i)
    if (p.tr_set[i] - p.tr_set[i - 1] != step) return std::nullopt;
  return step;
}

ClassificationReport classify(const Graph& g, const InvariantProfile& p) {
  const int n = g.order();
  ClassificationReport r;

  r.transmission_regular = (p.c_w == 1);
  r.transmission_irregular = (p.c_w == n);
  r.transmission_indivisible = is_transmission_indivisible(p);
  r.interval_irregular = is_interval_irregular(p);
  r.arithmetic_step = arithmetic_step(p);

  r.self_centered = (p.c_ec == 1);
  if (r.self_centered) r.k_self_centered = p.rad;

  {
    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = g.degree_of(v);
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    r.bidegreed = (degs.size() == 2);
  }

  r.center_regular_tree = is_tree(g) && is_center_regular_tree(g);
  if (n >= 2) r.ud_pairs = ud_pairs(g);
  return r;
}

bool is_center_regular_tree(const Graph& t) {
  if (!is_tree(t)) fail(ErrorKind::NotATree, "center-regularity is defined for trees");
  auto levels = distance_levels(t);
  for (const auto& level : levels) {
    int d = t.degree_of(level.front());
    for (int v : level)
      if (t.degree_of(v) != d) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> ud_pairs(const Graph& g) {
  const int n = g.order();
  if (n < 2) fail(ErrorKind::TooSmall, "UD pairs need order >= 2");
  DistanceMatrix dm = all_pairs_distances(g);
  std::vector<std::uint16_t> ec(n, 0);
  std::uint16_t diam = 0;
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) ec[v] = std::max(ec[v], dm.at(v, u));
    diam = std::max(diam, ec[v]);
  }
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (dm.at(u, v) != diam) continue;
      bool ok = true;
      for (int w = 0; w < n && ok; ++w) {
        if (w == u || w == v) continue;
        if (dm.at(w, u) != ec[w] && dm.at(w, v) != ec[w]) ok = false;
      }
      if (ok) out.emplace_back(u, v);
    }
  return out;
}

}  // namespace gcx
