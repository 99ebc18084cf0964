#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcx/graph.hpp"

namespace gcx {

// Named small graphs used by the verification suites and the tests. The
// builders fix the vertex numbering so frozen expected values stay valid.
namespace corpus {

// Tree on 7: path 0-1-2-3-4-5 with pendant 6 on vertex 2. Transmissions
// 18,13,10,11,14,19,15; transmission irregular but 18-11 is divisible by 7.
Graph branched_tree7();

// Order-6 variant (path 0-1-2-3-4, pendant 5 on vertex 2): Tr = {7,9,11,13},
// an arithmetic transmission graph with step 2.
Graph branched_tree6();

// Hexagon 0-1-2-3-4-5-0 rewired as: rim u=0, w1=1, w3=2, v=3, w4=4, w2=5
// with chords (1,5) and (2,4): Tr = {7,9}, arithmetic with step 2 and
// Tr contained in the tree above's set.
Graph chorded_hexagon();

// The unique interval irregular graph of order 7 (transmissions 7..13).
Graph interval7();

// An interval irregular graph of order 8 (transmissions 8..15).
Graph interval8();

// A 2-connected transmission indivisible graph of order 11 that is not
// interval irregular.
Graph indivisible11();

}  // namespace corpus

struct CheckResult {
  std::string claim;          // stable kebab-case id
  std::string statement;      // what is being checked
  long long instances = 0;    // instances examined
  bool pass = true;
  std::string counterexample; // first failing instance, empty when pass
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

// Documented default for the seeded random pair sampling.
inline constexpr std::uint64_t kDefaultSuiteSeed = 20200911;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSuiteSeed;
  int pair_budget = 200;   // random connected pairs in the identity suite
  int pair_max_order = 8;  // factor order bound for random pairs
  int tree_max_n = 14;
  int diam2_max_n = 8;
  int workers = 1;
};

// Identities and bounds that hold for every Cartesian product, checked on
// seeded random pairs plus the fixed corpus.
SuiteResult product_identity_suite(const SuiteOptions& opts = {});
// Equality cases that need specific hypotheses (coprime orders, arithmetic
// transmission sets, regular factors).
SuiteResult product_equality_suite(const SuiteOptions& opts = {});
// C_ec <= C_W over all free trees up to max_n, equality exactly for
// center-regular trees.
SuiteResult tree_suite(const SuiteOptions& opts = {});
// Diameter-2 consequences over the exhaustive corpus up to max_n.
SuiteResult diam2_suite(const SuiteOptions& opts = {});
// Closed-form families: punctured cubes, Z_k, Y_k, Z-powers, blooms,
// complete graphs minus a matching, lexicographic and Cartesian specials,
// center-regular trees, and amalgamations over UD pairs.
SuiteResult family_suite(const SuiteOptions& opts = {});

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace gcx
