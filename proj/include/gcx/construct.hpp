#pragma once

#include <span>
#include <string>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

// Vertex (g,h) of a product gets index g*n(H)+h, so witnesses are stable
// across runs.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph cartesian_power(const Graph& g, int m);
Graph lexicographic_product(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// k pendant vertices on every vertex of G; host keeps indices 0..n-1 and
// vertex i's pendants are n + i*k .. n + i*k + k-1.
Graph bloom(const Graph& g, int k);

Graph hypercube(int d);
// Q_d minus the all-zeros vertex; remaining vertices keep their hypercube
// coordinates shifted down by one (coordinate word w -> index w-1).
Graph hypercube_minus(int d);

// Cycle C_{2k+2} (vertices 0..2k+1 in cycle order) with pendant 2k+2 on
// vertex 0 and pendant 2k+3 on the antipodal vertex k+1.
Graph z_graph(int k);
// Path P_{2k+3} (vertices 0..2k+2) plus vertex 2k+3 adjacent to the two
// neighbors k and k+2 of the central vertex k+1.
Graph y_graph(int k);

// Balanced tree in which every vertex of distance-level i has level_degrees[i]
// children; unicentral grows from one root, bicentral from two adjacent roots.
Graph center_regular_tree(std::span<const int> level_degrees, bool bicentral);

// Disjoint union of A and B with vertex b of B merged onto vertex a of A.
// A keeps its indices; B's vertex w maps to nA + w (minus one past b).
Graph identify(const Graph& a, int va, const Graph& b, int vb);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, hub = vertex 0
Graph paw_graph();             // triangle 0,1,2 plus leaf 3 on vertex 0

// K_n minus the first k edges of the lexicographic matching
// (0,1),(2,3),...; requires k <= floor(n/2) so the result is regular or
// bidegreed. The second overload removes an explicit edge set instead.
Graph complete_minus_edges(int n, int k);
Graph complete_minus_edges(int n, std::span<const std::pair<int, int>> removed);

// Uniform CLI entry to the families above, e.g. "z:3", "qminus:4",
// "bloom:cycle:5:2", "crt:2,3", "crt:2,2:bi", "kminus:6:3".
struct FamilySpec {
  std::string text;
  static FamilySpec parse(const std::string& s) { return FamilySpec{s}; }
};

Graph standard_family(const FamilySpec& spec);

}  // namespace gcx
