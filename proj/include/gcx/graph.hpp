#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcx/error.hpp"

namespace gcx {

// Largest order any builder or decoder will produce. Keeps adjacency storage
// (n rows of n bits) and all-pairs distance matrices within sane memory.
inline constexpr int kMaxOrder = 4096;

// Immutable simple undirected graph. Adjacency is kept as per-vertex bit
// rows, one or more 64-bit words per row; bit u of row v set means uv is an
// edge. Rows are symmetric and the diagonal is always clear.
class Graph {
public:
  Graph() = default;

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges,
                          std::string label = {});

  int order() const { return n_; }
  int words_per_row() const { return words_; }
  const std::string& label() const { return label_; }

  bool has_edge(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  int degree_of(int v) const {
    int d = 0;
    for (int w = 0; w < words_; ++w)
      d += std::popcount(bits_[static_cast<size_t>(v) * words_ + w]);
    return d;
  }

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
  }

  long long edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree_of(v);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const;

  template <class F>
  void for_each_neighbor(int v, F&& fn) const {
    const std::uint64_t* r = bits_.data() + static_cast<size_t>(v) * words_;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t m = r[w];
      while (m) {
        fn((w << 6) + std::countr_zero(m));
        m &= m - 1;
      }
    }
  }

  // Adjacency equality; labels are ignored.
  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  class Builder {
  public:
    explicit Builder(int n, std::string label = {});
    Builder& add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    Builder& remove_edge(int u, int v);
    Graph build() &&;

  private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::string label_;
  };

private:
  friend class Builder;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::string label_;
};

// n x n matrix of hop distances of a connected graph.
struct DistanceMatrix {
  int n = 0;
  std::vector<std::uint16_t> d;  // row-major

  std::uint16_t at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
};

Graph build_graph(int n, std::span<const std::pair<int, int>> edges,
                  std::string label = {});
int degree(const Graph& g, int v);
bool is_connected(const Graph& g);
std::vector<std::uint16_t> bfs_distances(const Graph& g, int src);
DistanceMatrix all_pairs_distances(const Graph& g);
bool is_biconnected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace gcx
