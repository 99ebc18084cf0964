#pragma once

#include <cstdint>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

// Per-vertex transmissions and eccentricities plus everything derived from
// them in one pass: Wiener index, both complexities, diameter, radius,
// center, and the sorted transmission / eccentricity sets.
struct InvariantProfile {
  int n = 0;
  std::vector<std::uint32_t> tr;       // transmission per vertex
  std::vector<std::uint16_t> ec;       // eccentricity per vertex
  std::uint64_t wiener = 0;            // W(G) = (sum of tr) / 2
  int c_w = 0;                         // |tr_set|
  int c_ec = 0;                        // |ec_set| = diam - rad + 1
  int diam = 0;
  int rad = 0;
  std::vector<std::uint32_t> tr_set;   // distinct transmissions, ascending
  std::vector<std::uint16_t> ec_set;   // distinct eccentricities, ascending
  std::vector<int> center;             // vertices of minimum eccentricity, ascending
};

InvariantProfile profile(const Graph& g);

// L_i = vertices at distance exactly i from the center; the levels partition
// V(G) and L_0 is the center itself. Trailing empty levels are not returned.
std::vector<std::vector<int>> distance_levels(const Graph& g);

// Vertices realizing ec(w), ascending.
std::vector<int> eccentric_set(const Graph& g, int w);

}  // namespace gcx
