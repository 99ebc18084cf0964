#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

struct Shard {
  int index = 0;
  int count = 1;
};

// Configuration for the isomorph-free generators. Shards partition the
// search by subtree: the union of the outputs of shards 0..count-1 equals the
// unsharded output, with no overlaps.
struct GeneratorConfig {
  int n = 1;
  enum class Mode { connected_graphs, trees };
  Mode mode = Mode::connected_graphs;
  std::optional<int> max_degree;  // pruned during augmentation (graphs)
  std::optional<int> min_degree;  // filtered at emission
  Shard shard;
};

inline constexpr int kMaxConnectedOrder = 11;
inline constexpr int kMaxTreeOrder = 18;
inline constexpr int kMaxExactCanonicalOrder = 16;

namespace detail {

// Word-sized graph for the enumeration hot path (n <= 16).
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, 16> row{};

  void add_edge(int u, int v) {
    row[u] = static_cast<std::uint16_t>(row[u] | (1u << v));
    row[v] = static_cast<std::uint16_t>(row[v] | (1u << u));
  }
  bool has_edge(int u, int v) const { return (row[u] >> v) & 1u; }
  int degree(int v) const { return std::popcount(row[v]); }
};

SmallGraph to_small(const Graph& g);
Graph to_graph(const SmallGraph& g);

// Result of the exact canonical search: a canonical relabeling, generators
// of the automorphism group discovered along the way, and the vertex orbit
// partition they induce.
struct Canon {
  std::array<std::uint8_t, 16> perm{};   // perm[old vertex] = canonical position
  std::array<std::uint8_t, 16> orbit{};  // smallest vertex of each orbit
  std::vector<std::array<std::uint8_t, 16>> generators;  // old -> old maps
};

Canon canonicalize(const SmallGraph& g);
SmallGraph relabel(const SmallGraph& g, const std::array<std::uint8_t, 16>& perm);

}  // namespace detail

// One representative per isomorphism class of connected graphs of order
// cfg.n, by canonical-deletion augmentation. Deterministic output order for
// a fixed shard configuration.
class ConnectedGraphGenerator {
public:
  explicit ConnectedGraphGenerator(const GeneratorConfig& cfg);
  bool next(Graph& out);
  std::uint64_t emitted() const { return emitted_; }

private:
  struct Level {
    detail::SmallGraph g;
    std::vector<std::uint16_t> sets;  // orbit representatives of extensions
    size_t idx = 0;
  };

  bool advance(detail::SmallGraph& out);
  void push_level(const detail::SmallGraph& g);
  bool accept_child(const detail::SmallGraph& child);
  bool orbit_accept(const detail::SmallGraph& child, std::uint16_t cls, int x);

  GeneratorConfig cfg_;
  int gate_level_ = 0;
  std::uint64_t gate_counter_ = 0;
  std::uint64_t emitted_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<Level> stack_;
  std::vector<char> subset_seen_;
  std::vector<std::uint16_t> subset_queue_;
};

// One representative per isomorphism class of free trees of order cfg.n, by
// canonical level sequences rooted at the centroid: trees with one centroid
// come from the rooted-tree successor chain restricted to centroidal roots,
// bicentroidal trees from unordered pairs of rooted halves.
class TreeGenerator {
public:
  explicit TreeGenerator(const GeneratorConfig& cfg);
  bool next(Graph& out);
  std::uint64_t emitted() const { return emitted_; }

private:
  enum class Phase { unicentroidal, bicentroidal, done };

  bool next_candidate(Graph& out);
  void start_bicentroidal();

  GeneratorConfig cfg_;
  int n_ = 0;
  Phase phase_ = Phase::unicentroidal;
  bool started_ = false;
  std::vector<int> seq_;
  std::vector<std::vector<int>> halves_;
  size_t half_i_ = 0, half_j_ = 0;
  std::uint64_t gate_counter_ = 0;
  std::uint64_t emitted_ = 0;
};

// Identical byte strings exactly for isomorphic graphs (n <= 16): the graph6
// line of the canonically relabeled graph.
std::string canonical_form(const Graph& g);

}  // namespace gcx
