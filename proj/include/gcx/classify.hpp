#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gcx/invariants.hpp"

namespace gcx {

// Membership flags for the graph classes the library knows about. Flags are
// all derived from one InvariantProfile plus degree data.
struct ClassificationReport {
  bool transmission_regular = false;     // C_W = 1
  bool transmission_irregular = false;   // C_W = n
  bool transmission_indivisible = false; // all transmissions distinct mod n
  bool interval_irregular = false;       // transmissions = n consecutive integers
  std::optional<std::uint32_t> arithmetic_step;  // constant gap of tr_set, 0 if singleton
  bool self_centered = false;            // C_ec = 1
  std::optional<int> k_self_centered;    // the common eccentricity, when self-centered
  bool bidegreed = false;                // exactly two distinct degrees
  bool center_regular_tree = false;
  std::vector<std::pair<int, int>> ud_pairs;  // universally diametrical pairs
};

ClassificationReport classify(const Graph& g);
ClassificationReport classify(const Graph& g, const InvariantProfile& p);

// Profile-level class predicates, cheap enough for enumeration hot loops.
bool is_transmission_indivisible(const InvariantProfile& p);
bool is_interval_irregular(const InvariantProfile& p);
std::optional<std::uint32_t> arithmetic_step(const InvariantProfile& p);

// True iff T is a tree in which all vertices of each distance-level (from the
// center) share the same degree. Throws NotATree on non-tree input.
bool is_center_regular_tree(const Graph& t);

// All diametrical pairs (u,v) such that every other vertex w has u or v in
// its eccentric set. Lexicographically sorted.
std::vector<std::pair<int, int>> ud_pairs(const Graph& g);

}  // namespace gcx
