#include "gcx/enumerate.hpp"

#include <algorithm>
#include <climits>

#include "gcx/codec.hpp"

namespace gcx {

namespace detail {

SmallGraph to_small(const Graph& g) {
  if (g.order() > 16) fail(ErrorKind::TooLarge, "exact canonical form is limited to order 16");
  SmallGraph s;
  s.n = g.order();
  for (int v = 0; v < s.n; ++v)
    g.for_each_neighbor(v, [&](int u) {
      s.row[v] = static_cast<std::uint16_t>(s.row[v] | (1u << u));
    });
  return s;
}

Graph to_graph(const SmallGraph& g) {
  Graph::Builder b(g.n);
  for (int v = 0; v < g.n; ++v) {
    std::uint16_t m = g.row[v];
    while (m) {
      int u = std::countr_zero(m);
      m &= static_cast<std::uint16_t>(m - 1);
      if (v < u) b.add_edge(v, u);
    }
  }
  return std::move(b).build();
}

SmallGraph relabel(const SmallGraph& g, const std::array<std::uint8_t, 16>& perm) {
  SmallGraph out;
  out.n = g.n;
  for (int v = 0; v < g.n; ++v) {
    std::uint16_t m = g.row[v];
    while (m) {
      int u = std::countr_zero(m);
      m &= static_cast<std::uint16_t>(m - 1);
      if (v < u) out.add_edge(perm[v], perm[u]);
    }
  }
  return out;
}

namespace {

struct UnionFind16 {
  std::array<std::uint8_t, 16> p{};

  void init(int n) {
    for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (p[x] != x) {
      p[x] = p[p[x]];
      x = p[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p[b] = static_cast<std::uint8_t>(a);
  }
};

struct Encoding {
  std::array<std::uint64_t, 2> w{};
  friend bool operator==(const Encoding&, const Encoding&) = default;
  friend auto operator<=>(const Encoding& a, const Encoding& b) {
    return a.w <=> b.w;
  }
};

// Ordered partition of the vertices: order[] lists vertices, cell_start has a
// bit per position that begins a cell. Cell order is structure-derived, so
// it is identical for isomorphic graphs.
struct PartitionNode {
  std::array<std::uint8_t, 16> order{};
  std::uint32_t cell_start = 0;
};

struct CanonSearch {
  const SmallGraph* g = nullptr;
  int n = 0;
  Encoding best_enc, first_enc;
  std::array<std::uint8_t, 16> best_perm{}, first_perm{};
  bool have_best = false, have_first = false;
  UnionFind16 uf;
  std::vector<std::array<std::uint8_t, 16>> gens;

  void run(const SmallGraph& graph) {
    g = &graph;
    n = graph.n;
    uf.init(n);
    PartitionNode root;
    for (int i = 0; i < n; ++i) root.order[i] = static_cast<std::uint8_t>(i);
    root.cell_start = 1;  // one cell covering everything
    search(root);
  }

  // Equitable refinement: split every cell by the vector of neighbor counts
  // into the current cells, iterating to a fixed point. Sub-cells are ordered
  // by ascending count key, which keeps cell order isomorphism-invariant.
  void refine(PartitionNode& nd) const {
    std::array<std::uint64_t, 16> key;
    std::array<std::uint16_t, 16> cell_mask;
    std::array<std::uint8_t, 16> cell_of_pos;
    for (;;) {
      int ncells = 0;
      for (int i = 0; i < n; ++i) {
        if (nd.cell_start & (1u << i)) {
          cell_mask[ncells] = 0;
          ++ncells;
        }
        cell_of_pos[i] = static_cast<std::uint8_t>(ncells - 1);
        cell_mask[ncells - 1] =
            static_cast<std::uint16_t>(cell_mask[ncells - 1] | (1u << nd.order[i]));
      }
      if (ncells == n) return;
      for (int i = 0; i < n; ++i) {
        std::uint64_t k = 0;
        std::uint16_t r = g->row[nd.order[i]];
        for (int c = 0; c < ncells; ++c)
          k |= static_cast<std::uint64_t>(std::popcount(static_cast<std::uint16_t>(r & cell_mask[c])))
               << (4 * c);
        key[i] = k;
      }
      bool changed = false;
      int i = 0;
      while (i < n) {
        int j = i + 1;
        while (j < n && !(nd.cell_start & (1u << j))) ++j;
        if (j - i > 1) {
          // insertion sort positions i..j-1 by key
          for (int a = i + 1; a < j; ++a) {
            std::uint64_t ka = key[a];
            std::uint8_t va = nd.order[a];
            int b = a;
            while (b > i && key[b - 1] > ka) {
              key[b] = key[b - 1];
              nd.order[b] = nd.order[b - 1];
              --b;
            }
            key[b] = ka;
            nd.order[b] = va;
          }
          for (int a = i + 1; a < j; ++a)
            if (key[a] != key[a - 1] && !(nd.cell_start & (1u << a))) {
              nd.cell_start |= 1u << a;
              changed = true;
            }
        }
        i = j;
      }
      if (!changed) return;
    }
  }

  bool discrete(const PartitionNode& nd) const {
    return std::popcount(nd.cell_start) == n;
  }

  Encoding encode_leaf(const PartitionNode& nd) const {
    Encoding e;
    int t = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++t)
        if (g->has_edge(nd.order[i], nd.order[j])) e.w[t >> 6] |= 1ull << (t & 63);
    return e;
  }

  void record_automorphism(const std::array<std::uint8_t, 16>& pa,
                           const std::array<std::uint8_t, 16>& pb) {
    std::array<std::uint8_t, 16> inv_pb{};
    for (int v = 0; v < n; ++v) inv_pb[pb[v]] = static_cast<std::uint8_t>(v);
    std::array<std::uint8_t, 16> gamma{};
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      gamma[v] = inv_pb[pa[v]];
      if (gamma[v] != v) identity = false;
    }
    if (identity) return;
    for (const auto& known : gens)
      if (std::equal(known.begin(), known.begin() + n, gamma.begin())) return;
    gens.push_back(gamma);
    for (int v = 0; v < n; ++v) uf.unite(v, gamma[v]);
  }

  void leaf(const PartitionNode& nd) {
    Encoding e = encode_leaf(nd);
    std::array<std::uint8_t, 16> perm{};
    for (int i = 0; i < n; ++i) perm[nd.order[i]] = static_cast<std::uint8_t>(i);
    if (!have_first) {
      first_enc = e;
      first_perm = perm;
      have_first = true;
    } else if (e == first_enc) {
      record_automorphism(first_perm, perm);
    }
    if (!have_best || e < best_enc) {
      best_enc = e;
      best_perm = perm;
      have_best = true;
    } else if (e == best_enc) {
      record_automorphism(best_perm, perm);
    }
  }

  void search(PartitionNode nd) {
    refine(nd);
    if (discrete(nd)) {
      leaf(nd);
      return;
    }
    // first non-singleton cell
    int cell_pos = -1, cell_end = -1;
    for (int i = 0; i < n && cell_pos < 0; ++i) {
      if (!(nd.cell_start & (1u << i))) continue;
      int j = i + 1;
      while (j < n && !(nd.cell_start & (1u << j))) ++j;
      if (j - i > 1) {
        cell_pos = i;
        cell_end = j;
      } else {
        i = j - 1;
      }
    }
    std::array<std::uint8_t, 16> members{};
    const int mcount = cell_end - cell_pos;
    for (int i = 0; i < mcount; ++i) members[i] = nd.order[cell_pos + i];

    std::array<std::uint8_t, 16> processed{};
    int pcount = 0;
    for (int mi = 0; mi < mcount; ++mi) {
      int v = members[mi];
      bool prune = false;
      for (int pi = 0; pi < pcount && !prune; ++pi)
        if (uf.find(processed[pi]) == uf.find(v)) prune = true;
      if (prune) continue;
      PartitionNode child = nd;
      // individualize v: move it to the front of its cell, split there
      int vp = cell_pos;
      while (child.order[vp] != v) ++vp;
      for (int i = vp; i > cell_pos; --i) child.order[i] = child.order[i - 1];
      child.order[cell_pos] = static_cast<std::uint8_t>(v);
      child.cell_start |= 1u << (cell_pos + 1);
      search(child);
      processed[pcount++] = static_cast<std::uint8_t>(v);
    }
  }
};

}  // namespace

Canon canonicalize(const SmallGraph& g) {
  Canon out;
  if (g.n == 0) return out;
  CanonSearch cs;
  cs.run(g);
  out.perm = cs.best_perm;
  out.generators = std::move(cs.gens);
  for (int v = 0; v < g.n; ++v)
    out.orbit[v] = static_cast<std::uint8_t>(cs.uf.find(v));
  return out;
}

}  // namespace detail

std::string canonical_form(const Graph& g) {
  if (g.order() > kMaxExactCanonicalOrder)
    fail(ErrorKind::TooLarge,
         "exact canonical form supports order <= " + std::to_string(kMaxExactCanonicalOrder));
  if (g.order() == 0) return encode_graph6(g);
  detail::SmallGraph s = detail::to_small(g);
  detail::Canon c = detail::canonicalize(s);
  return encode_graph6(detail::to_graph(detail::relabel(s, c.perm)));
}

namespace {

using detail::SmallGraph;

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Two rounds of neighborhood hashing on top of degrees. Any hash collision
// only coarsens the candidate class, which stays sound for the canonical
// deletion test.
void vertex_invariants(const SmallGraph& g, std::array<std::uint64_t, 16>& h) {
  std::array<std::uint64_t, 16> tmp;
  for (int v = 0; v < g.n; ++v) h[v] = mix64(0x9e3779b97f4a7c15ULL + g.degree(v));
  for (int round = 0; round < 2; ++round) {
    for (int v = 0; v < g.n; ++v) {
      std::uint64_t sum = 0;
      std::uint16_t m = g.row[v];
      while (m) {
        sum += h[std::countr_zero(m)];
        m &= static_cast<std::uint16_t>(m - 1);
      }
      tmp[v] = mix64(h[v] * 0x100000001b3ULL ^ sum);
    }
    for (int v = 0; v < g.n; ++v) h[v] = tmp[v];
  }
}

struct ArticState {
  const SmallGraph* g;
  int timer = 0;
  std::array<std::int8_t, 16> disc{};
  std::array<std::int8_t, 16> low{};
  std::uint16_t artic = 0;
};

void artic_dfs(ArticState& st, int v, int parent) {
  st.disc[v] = st.low[v] = static_cast<std::int8_t>(st.timer++);
  int children = 0;
  std::uint16_t m = st.g->row[v];
  while (m) {
    int u = std::countr_zero(m);
    m &= static_cast<std::uint16_t>(m - 1);
    if (st.disc[u] < 0) {
      ++children;
      artic_dfs(st, u, v);
      st.low[v] = std::min(st.low[v], st.low[u]);
      if (parent >= 0 && st.low[u] >= st.disc[v]) st.artic |= 1u << v;
    } else if (u != parent) {
      st.low[v] = std::min(st.low[v], st.disc[u]);
    }
  }
  if (parent < 0 && children > 1) st.artic |= 1u << v;
}

// Mask of vertices whose removal keeps the graph connected.
std::uint16_t noncut_mask(const SmallGraph& g) {
  ArticState st;
  st.g = &g;
  st.disc.fill(-1);
  artic_dfs(st, 0, -1);
  return static_cast<std::uint16_t>(((1u << g.n) - 1) & ~st.artic);
}

}  // namespace

ConnectedGraphGenerator::ConnectedGraphGenerator(const GeneratorConfig& cfg) : cfg_(cfg) {
  if (cfg_.mode != GeneratorConfig::Mode::connected_graphs)
    fail(ErrorKind::BadParameter, "config mode is not connected_graphs");
  if (cfg_.n < 1 || cfg_.n > kMaxConnectedOrder)
    fail(ErrorKind::BadParameter,
         "connected generation supports 1 <= n <= " + std::to_string(kMaxConnectedOrder));
  if (cfg_.shard.count < 1 || cfg_.shard.index < 0 || cfg_.shard.index >= cfg_.shard.count)
    fail(ErrorKind::BadParameter, "invalid shard");
  gate_level_ = std::min(8, cfg_.n);
}

void ConnectedGraphGenerator::push_level(const SmallGraph& g) {
  Level lv;
  lv.g = g;
  const int k = g.n;
  const std::uint32_t full = (1u << k) - 1;
  const int maxd = cfg_.max_degree.value_or(INT_MAX);
  std::uint16_t saturated = 0;
  for (int v = 0; v < k; ++v)
    if (g.degree(v) >= maxd) saturated |= 1u << v;
  auto valid = [&](std::uint32_t m) {
    return std::popcount(m) <= maxd && !(m & saturated);
  };

  detail::Canon canon = detail::canonicalize(g);
  if (canon.generators.empty()) {
    for (std::uint32_t m = 1; m <= full; ++m)
      if (valid(m)) lv.sets.push_back(static_cast<std::uint16_t>(m));
  } else {
    subset_seen_.assign(full + 1, 0);
    for (std::uint32_t m = 1; m <= full; ++m) {
      if (subset_seen_[m]) continue;
      subset_queue_.clear();
      subset_queue_.push_back(static_cast<std::uint16_t>(m));
      subset_seen_[m] = 1;
      while (!subset_queue_.empty()) {
        std::uint16_t t = subset_queue_.back();
        subset_queue_.pop_back();
        for (const auto& gen : canon.generators) {
          std::uint16_t img = 0, s = t;
          while (s) {
            img = static_cast<std::uint16_t>(img | (1u << gen[std::countr_zero(s)]));
            s &= static_cast<std::uint16_t>(s - 1);
          }
          if (!subset_seen_[img]) {
            subset_seen_[img] = 1;
            subset_queue_.push_back(img);
          }
        }
      }
      if (valid(m)) lv.sets.push_back(static_cast<std::uint16_t>(m));
    }
  }
  stack_.push_back(std::move(lv));
}

bool ConnectedGraphGenerator::orbit_accept(const SmallGraph& child, std::uint16_t cls, int x) {
  detail::Canon canon = detail::canonicalize(child);
  int vstar = -1, best_pos = -1;
  std::uint16_t m = cls;
  while (m) {
    int v = std::countr_zero(m);
    m &= static_cast<std::uint16_t>(m - 1);
    if (canon.perm[v] > best_pos) {
      best_pos = canon.perm[v];
      vstar = v;
    }
  }
  return canon.orbit[x] == canon.orbit[vstar];
}

// Canonical-deletion test: the new vertex x (always the last one) is accepted
// iff it lies in the orbit of the designated deletion vertex: the vertex of
// maximal canonical position within the minimum-invariant class of non-cut
// vertices. Cheap invariant filters settle most cases without a canonical
// search.
bool ConnectedGraphGenerator::accept_child(const SmallGraph& child) {
  const int x = child.n - 1;
  const std::uint16_t xbit = static_cast<std::uint16_t>(1u << x);
  std::array<std::uint64_t, 16> h;
  vertex_invariants(child, h);
  const std::uint64_t hx = h[x];
  std::uint64_t hmin = hx;
  for (int v = 0; v < child.n; ++v) hmin = std::min(hmin, h[v]);

  if (hx == hmin) {
    std::uint16_t cls = 0;
    for (int v = 0; v < child.n; ++v)
      if (h[v] == hmin) cls |= 1u << v;
    if (cls == xbit) return true;  // x is the unique minimum, and x is non-cut
    std::uint16_t cand = cls & noncut_mask(child);
    if (cand == xbit) return true;
    return orbit_accept(child, cand, x);
  }
  std::uint16_t noncut = noncut_mask(child);
  std::uint16_t cand = xbit;
  std::uint16_t m = static_cast<std::uint16_t>(noncut & ~xbit);
  while (m) {
    int v = std::countr_zero(m);
    m &= static_cast<std::uint16_t>(m - 1);
    if (h[v] < hx) return false;
    if (h[v] == hx) cand |= 1u << v;
  }
  if (cand == xbit) return true;
  return orbit_accept(child, cand, x);
}

bool ConnectedGraphGenerator::advance(SmallGraph& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    SmallGraph k1;
    k1.n = 1;
    if (cfg_.n == 1) {
      done_ = true;
      if (cfg_.shard.index != 0) return false;
      if (cfg_.min_degree.value_or(0) > 0) return false;
      out = k1;
      return true;
    }
    push_level(k1);
  }
  const int mind = cfg_.min_degree.value_or(0);
  while (!stack_.empty()) {
    Level& lv = stack_.back();
    if (lv.idx >= lv.sets.size()) {
      stack_.pop_back();
      continue;
    }
    const std::uint16_t set = lv.sets[lv.idx++];
    SmallGraph child = lv.g;
    const int x = child.n;
    child.n = x + 1;
    child.row[x] = set;
    std::uint16_t s = set;
    while (s) {
      int v = std::countr_zero(s);
      s &= static_cast<std::uint16_t>(s - 1);
      child.row[v] = static_cast<std::uint16_t>(child.row[v] | (1u << x));
    }
    if (!accept_child(child)) continue;
    if (child.n == gate_level_ &&
        static_cast<int>(gate_counter_++ % cfg_.shard.count) != cfg_.shard.index)
      continue;
    if (child.n == cfg_.n) {
      if (mind > 0) {
        bool ok = true;
        for (int v = 0; v < child.n && ok; ++v)
          if (child.degree(v) < mind) ok = false;
        if (!ok) continue;
      }
      out = child;
      return true;
    }
    push_level(child);
  }
  done_ = true;
  return false;
}

bool ConnectedGraphGenerator::next(Graph& out) {
  SmallGraph s;
  if (!advance(s)) return false;
  out = detail::to_graph(s);
  ++emitted_;
  return true;
}

namespace {

// Successor of a canonical rooted-tree level sequence (depths, preorder,
// subtrees in non-increasing sequence order); sequences are visited in
// decreasing lexicographic order starting from the path.
bool next_level_sequence(std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (seq[i] >= 2) {
      p = i;
      break;
    }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (seq[i] == seq[p] - 1) {
      q = i;
      break;
    }
  for (int i = p; i < n; ++i) seq[i] = seq[i - (p - q)];
  return true;
}

// True iff the root of the level sequence is the unique centroid: every
// root subtree has fewer than n/2 vertices.
bool root_is_strict_centroid(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  int i = 1;
  while (i < n) {
    int j = i + 1;
    while (j < n && seq[j] > 1) ++j;
    if (2 * (j - i) >= n) return false;
    i = j;
  }
  return true;
}

Graph tree_from_sequence(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  Graph::Builder b(n);
  std::array<int, 32> last_at_depth{};
  last_at_depth[0] = 0;
  for (int i = 1; i < n; ++i) {
    b.add_edge(last_at_depth[seq[i] - 1], i);
    last_at_depth[seq[i]] = i;
  }
  return std::move(b).build();
}

Graph joined_halves(const std::vector<int>& a, const std::vector<int>& b) {
  const int h = static_cast<int>(a.size());
  Graph::Builder builder(2 * h);
  std::array<int, 32> last_at_depth{};
  last_at_depth[0] = 0;
  for (int i = 1; i < h; ++i) {
    builder.add_edge(last_at_depth[a[i] - 1], i);
    last_at_depth[a[i]] = i;
  }
  last_at_depth[0] = h;
  for (int i = 1; i < h; ++i) {
    builder.add_edge(last_at_depth[b[i] - 1], h + i);
    last_at_depth[b[i]] = h + i;
  }
  builder.add_edge(0, h);
  return std::move(builder).build();
}

}  // namespace

TreeGenerator::TreeGenerator(const GeneratorConfig& cfg) : cfg_(cfg), n_(cfg.n) {
  if (cfg_.mode != GeneratorConfig::Mode::trees)
    fail(ErrorKind::BadParameter, "config mode is not trees");
  if (cfg_.n < 1 || cfg_.n > kMaxTreeOrder)
    fail(ErrorKind::BadParameter,
         "tree generation supports 1 <= n <= " + std::to_string(kMaxTreeOrder));
  if (cfg_.shard.count < 1 || cfg_.shard.index < 0 || cfg_.shard.index >= cfg_.shard.count)
    fail(ErrorKind::BadParameter, "invalid shard");
}

void TreeGenerator::start_bicentroidal() {
  if (n_ % 2 != 0) {
    phase_ = Phase::done;
    return;
  }
  const int h = n_ / 2;
  std::vector<int> s(h);
  for (int i = 0; i < h; ++i) s[i] = i;
  halves_.push_back(s);
  while (next_level_sequence(s)) halves_.push_back(s);
  half_i_ = half_j_ = 0;
  phase_ = Phase::bicentroidal;
}

bool TreeGenerator::next_candidate(Graph& out) {
  for (;;) {
    if (phase_ == Phase::unicentroidal) {
      if (!started_) {
        started_ = true;
        seq_.resize(n_);
        for (int i = 0; i < n_; ++i) seq_[i] = i;
      } else if (!next_level_sequence(seq_)) {
        start_bicentroidal();
        continue;
      }
      if (!root_is_strict_centroid(seq_)) continue;
      out = tree_from_sequence(seq_);
      return true;
    }
    if (phase_ == Phase::bicentroidal) {
      if (half_i_ >= halves_.size()) {
        phase_ = Phase::done;
        continue;
      }
      out = joined_halves(halves_[half_i_], halves_[half_j_]);
      if (++half_j_ >= halves_.size()) {
        ++half_i_;
        half_j_ = half_i_;
      }
      return true;
    }
    return false;
  }
}

bool TreeGenerator::next(Graph& out) {
  Graph g;
  while (next_candidate(g)) {
    if (static_cast<int>(gate_counter_++ % cfg_.shard.count) != cfg_.shard.index) continue;
    if (cfg_.min_degree || cfg_.max_degree) {
      const int mind = cfg_.min_degree.value_or(0);
      const int maxd = cfg_.max_degree.value_or(INT_MAX);
      bool ok = true;
      for (int v = 0; v < g.order() && ok; ++v) {
        int d = g.degree_of(v);
        if (d < mind || d > maxd) ok = false;
      }
      if (!ok) continue;
    }
    out = std::move(g);
    ++emitted_;
    return true;
  }
  return false;
}

}  // namespace gcx
