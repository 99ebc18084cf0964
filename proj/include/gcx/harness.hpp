#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcx/classify.hpp"
#include "gcx/enumerate.hpp"

namespace gcx {

// A search universe: either a built-in generator run or an external
// graph6/sparse6 stream.
struct UniverseSpec {
  enum class Kind { generator, g6_file };
  Kind kind = Kind::generator;
  GeneratorConfig gen;
  std::string path;

  static UniverseSpec connected(int n);
  static UniverseSpec trees(int n);
  static UniverseSpec file(std::string path);
  // "connected:9", "trees:12", "g6:stream.g6"
  static UniverseSpec parse(const std::string& text);
  std::string describe() const;
};

enum class PredicateId {
  interval_irregular,
  interval_irregular_biconnected,
  transmission_indivisible,
  indivisible_not_interval,
  transmission_irregular,
  transmission_regular,
  arithmetic_transmission,
  diam3_ec_gt_cw,
};

PredicateId predicate_from_name(const std::string& name);
std::string predicate_name(PredicateId id);
std::vector<std::string> predicate_names();
bool eval_predicate(PredicateId id, const Graph& g, const InvariantProfile& p);

struct SearchTask {
  std::string name;
  UniverseSpec universe;
  PredicateId predicate = PredicateId::interval_irregular;
  bool collect_witnesses = false;
  enum class Histogram { none, tr_interval, structure } histogram = Histogram::none;
  size_t witness_cap = 10000;
};

struct Expectation {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct SearchReport {
  std::string task;
  std::vector<std::string> universes;
  std::uint64_t examined = 0;
  std::uint64_t matched = 0;
  std::vector<std::string> witnesses;  // canonical graph6, ascending
  bool witnesses_truncated = false;
  std::map<std::string, std::uint64_t> histogram;
  double wall_ms = 0;
  std::string shard = "0/1";
  int workers = 1;
  std::vector<Expectation> expectations;
  bool pass = true;

  // include_volatile=false drops wall_ms and workers, leaving only content
  // that is identical across worker counts.
  nlohmann::json to_json(bool include_volatile = true) const;
  std::string csv_summary() const;
};

// Examines every graph of the universe exactly once; counts, histograms and
// the sorted witness list do not depend on the worker count.
SearchReport run_search(const SearchTask& task, int workers = 1);

// Registered reproduction tasks with pinned expected values:
//   interval-counts    counts of interval irregular graphs, n = 7..10
//   diam3-gap          no graph of order <= 10 has diam 3 and C_ec > C_W
//   indivisible-11     [extended] indivisible-but-not-interval census at n = 11
//   interval-11-2conn  [extended] 2-connected interval irregular census at n = 11
std::vector<std::string> reproduce_task_names();
SearchReport reproduce(const std::string& name, int workers = 1, bool extended = false,
                       const std::string& g6_override = {});

}  // namespace gcx
