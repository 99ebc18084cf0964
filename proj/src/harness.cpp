#include "gcx/harness.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "gcx/codec.hpp"

namespace gcx {

UniverseSpec UniverseSpec::connected(int n) {
  UniverseSpec u;
  u.kind = Kind::generator;
  u.gen.n = n;
  u.gen.mode = GeneratorConfig::Mode::connected_graphs;
  return u;
}

UniverseSpec UniverseSpec::trees(int n) {
  UniverseSpec u;
  u.kind = Kind::generator;
  u.gen.n = n;
  u.gen.mode = GeneratorConfig::Mode::trees;
  return u;
}

UniverseSpec UniverseSpec::file(std::string path) {
  UniverseSpec u;
  u.kind = Kind::g6_file;
  u.path = std::move(path);
  return u;
}

UniverseSpec UniverseSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    fail(ErrorKind::BadParameter, "universe must look like connected:N, trees:N or g6:FILE");
  std::string head = text.substr(0, colon);
  std::string tail = text.substr(colon + 1);
  if (head == "g6") return file(tail);
  int n = 0;
  try {
    n = std::stoi(tail);
  } catch (...) {
    fail(ErrorKind::BadParameter, "bad universe order '" + tail + "'");
  }
  if (head == "connected") return connected(n);
  if (head == "trees") return trees(n);
  fail(ErrorKind::BadParameter, "unknown universe '" + head + "'");
}

std::string UniverseSpec::describe() const {
  if (kind == Kind::g6_file) return "g6:" + path;
  std::string mode = gen.mode == GeneratorConfig::Mode::trees ? "trees" : "connected";
  return mode + ":" + std::to_string(gen.n);
}

namespace {

const std::pair<PredicateId, const char*> kPredicateNames[] = {
    {PredicateId::interval_irregular, "interval-irregular"},
    {PredicateId::interval_irregular_biconnected, "interval-irregular-2connected"},
    {PredicateId::transmission_indivisible, "transmission-indivisible"},
    {PredicateId::indivisible_not_interval, "indivisible-not-interval"},
    {PredicateId::transmission_irregular, "transmission-irregular"},
    {PredicateId::transmission_regular, "transmission-regular"},
    {PredicateId::arithmetic_transmission, "arithmetic-transmission"},
    {PredicateId::diam3_ec_gt_cw, "diam3-ec-gt-cw"},
};

}  // namespace

PredicateId predicate_from_name(const std::string& name) {
  for (auto [id, s] : kPredicateNames)
    if (name == s) return id;
  fail(ErrorKind::UnknownTask, "unknown predicate '" + name + "'");
}

std::string predicate_name(PredicateId id) {
  for (auto [pid, s] : kPredicateNames)
    if (pid == id) return s;
  return "?";
}

std::vector<std::string> predicate_names() {
  std::vector<std::string> out;
  for (auto [id, s] : kPredicateNames) out.push_back(s);
  return out;
}

bool eval_predicate(PredicateId id, const Graph& g, const InvariantProfile& p) {
  switch (id) {
    case PredicateId::interval_irregular:
      return is_interval_irregular(p);
    case PredicateId::interval_irregular_biconnected:
      return is_interval_irregular(p) && g.order() >= 3 && is_biconnected(g);
    case PredicateId::transmission_indivisible:
      return is_transmission_indivisible(p);
    case PredicateId::indivisible_not_interval:
      return is_transmission_indivisible(p) && !is_interval_irregular(p);
    case PredicateId::transmission_irregular:
      return p.c_w == p.n;
    case PredicateId::transmission_regular:
      return p.c_w == 1;
    case PredicateId::arithmetic_transmission:
      return arithmetic_step(p).has_value();
    case PredicateId::diam3_ec_gt_cw:
      return p.diam == 3 && p.c_ec > p.c_w;
  }
  return false;
}

namespace {

struct Accumulator {
  std::uint64_t examined = 0;
  std::uint64_t matched = 0;
  std::multiset<std::string> witnesses;
  std::map<std::string, std::uint64_t> histogram;

  void merge(Accumulator&& o, size_t cap) {
    examined += o.examined;
    matched += o.matched;
    for (auto& w : o.witnesses) {
      witnesses.insert(w);
      if (witnesses.size() > cap) witnesses.erase(std::prev(witnesses.end()));
    }
    for (auto& [k, v] : o.histogram) histogram[k] += v;
  }
};

std::string witness_string(const Graph& g) {
  if (g.order() <= kMaxExactCanonicalOrder) return canonical_form(g);
  return encode_graph6(g);
}

void evaluate(const SearchTask& task, const Graph& g, const InvariantProfile& p,
              Accumulator& acc) {
  ++acc.examined;
  bool match;
  try {
    match = eval_predicate(task.predicate, g, p);
  } catch (const Error& e) {
    throw Error(e.kind(),
                std::string(e.what()) + " (while evaluating " + encode_graph6(g) + ")");
  }
  if (!match) return;
  ++acc.matched;
  if (task.collect_witnesses) {
    acc.witnesses.insert(witness_string(g));
    if (acc.witnesses.size() > task.witness_cap)
      acc.witnesses.erase(std::prev(acc.witnesses.end()));
  }
  if (task.histogram == SearchTask::Histogram::tr_interval) {
    std::string key =
        "[" + std::to_string(p.tr_set.front()) + ".." + std::to_string(p.tr_set.back()) + "]";
    ++acc.histogram[key];
  } else if (task.histogram == SearchTask::Histogram::structure) {
    if (g.order() >= 3 && is_biconnected(g)) ++acc.histogram["2-connected"];
    if (is_tree(g)) ++acc.histogram["tree"];
  }
}

void run_generator_worker(const SearchTask& task, const GeneratorConfig& cfg,
                          Accumulator& acc) {
  Graph g;
  if (cfg.mode == GeneratorConfig::Mode::connected_graphs) {
    ConnectedGraphGenerator gen(cfg);
    while (gen.next(g)) evaluate(task, g, profile(g), acc);
  } else {
    TreeGenerator gen(cfg);
    while (gen.next(g)) evaluate(task, g, profile(g), acc);
  }
}

// Shared line feed for file universes.
struct LineFeed {
  std::ifstream in;
  std::mutex mu;
  size_t line_no = 0;
  bool done = false;

  // Returns decoded batch; empty batch means end of stream.
  std::vector<std::pair<size_t, std::string>> next_batch() {
    std::lock_guard<std::mutex> lock(mu);
    std::vector<std::pair<size_t, std::string>> batch;
    if (done) return batch;
    std::string line;
    while (batch.size() < 256 && std::getline(in, line)) {
      ++line_no;
      while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
      if (line.empty() || line == ">>graph6<<" || line == ">>sparse6<<") continue;
      batch.emplace_back(line_no, line);
    }
    if (batch.empty()) done = true;
    return batch;
  }
};

void run_file_worker(const SearchTask& task, LineFeed& feed, Accumulator& acc) {
  for (;;) {
    auto batch = feed.next_batch();
    if (batch.empty()) return;
    for (auto& [no, line] : batch) {
      Graph g;
      InvariantProfile p;
      try {
        g = decode_line(line);
        p = profile(g);
      } catch (const Error& e) {
        throw Error(e.kind(), "line " + std::to_string(no) + ": " + e.what());
      }
      evaluate(task, g, p, acc);
    }
  }
}

}  // namespace

SearchReport run_search(const SearchTask& task, int workers) {
  workers = std::max(1, workers);
  auto t0 = std::chrono::steady_clock::now();

  SearchReport rep;
  rep.task = task.name;
  rep.universes.push_back(task.universe.describe());
  rep.workers = workers;
  if (task.universe.kind == UniverseSpec::Kind::generator) {
    rep.shard = std::to_string(task.universe.gen.shard.index) + "/" +
                std::to_string(task.universe.gen.shard.count);
  }

  std::vector<Accumulator> accs(workers);
  std::vector<std::thread> threads;
  std::mutex err_mu;
  std::exception_ptr first_error;

  auto guard = [&](int w, auto&& fn) {
    try {
      fn(accs[w]);
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (task.universe.kind == UniverseSpec::Kind::generator) {
    const Shard base = task.universe.gen.shard;
    for (int w = 0; w < workers; ++w) {
      GeneratorConfig cfg = task.universe.gen;
      cfg.shard.index = base.index + base.count * w;
      cfg.shard.count = base.count * workers;
      if (workers == 1) {
        guard(0, [&](Accumulator& a) { run_generator_worker(task, cfg, a); });
      } else {
        threads.emplace_back(
            [&, w, cfg]() { guard(w, [&](Accumulator& a) { run_generator_worker(task, cfg, a); }); });
      }
    }
  } else {
    LineFeed feed;
    feed.in.open(task.universe.path);
    if (!feed.in)
      fail(ErrorKind::BadParameter, "cannot open graph6 stream '" + task.universe.path + "'");
    if (workers == 1) {
      guard(0, [&](Accumulator& a) { run_file_worker(task, feed, a); });
    } else {
      for (int w = 0; w < workers; ++w)
        threads.emplace_back(
            [&, w]() { guard(w, [&](Accumulator& a) { run_file_worker(task, feed, a); }); });
    }
    for (auto& t : threads) t.join();
    threads.clear();
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);

  Accumulator total;
  for (auto& a : accs) total.merge(std::move(a), task.witness_cap);
  rep.examined = total.examined;
  rep.matched = total.matched;
  rep.histogram = std::move(total.histogram);
  if (task.collect_witnesses) {
    rep.witnesses.assign(total.witnesses.begin(), total.witnesses.end());
    rep.witnesses_truncated = rep.matched > rep.witnesses.size();
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

nlohmann::json SearchReport::to_json(bool include_volatile) const {
  nlohmann::json j;
  j["task"] = task;
  j["universes"] = universes;
  j["examined"] = examined;
  j["matched"] = matched;
  j["witnesses"] = witnesses;
  j["witnesses_truncated"] = witnesses_truncated;
  j["histogram"] = histogram;
  j["shard"] = shard;
  nlohmann::json ex = nlohmann::json::array();
  for (const auto& e : expectations)
    ex.push_back({{"name", e.name},
                  {"expected", e.expected},
                  {"observed", e.observed},
                  {"pass", e.pass}});
  j["expectations"] = ex;
  j["pass"] = pass;
  if (include_volatile) {
    j["wall_ms"] = wall_ms;
    j["workers"] = workers;
  }
  return j;
}

std::string SearchReport::csv_summary() const {
  std::ostringstream out;
  out << "kind,name,observed,expected,status\n";
  out << "total,task " << task << "," << matched << ",," << (pass ? "PASS" : "FAIL") << "\n";
  out << "total,examined," << examined << ",,\n";
  for (const auto& [k, v] : histogram) out << "histogram," << k << "," << v << ",,\n";
  for (const auto& e : expectations)
    out << "expectation," << e.name << "," << e.observed << "," << e.expected << ","
        << (e.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

namespace {

struct SubRun {
  std::string expectation_name;
  SearchTask task;
  // Pass criteria on the finished sub-run: exact match count, minimum match
  // count, exact universe size, or histogram entries.
  enum class Kind { count_eq, count_ge, examined_eq, hist_ge } kind = Kind::count_eq;
  std::uint64_t value = 0;
  std::string hist_key;
};

SearchReport run_subtasks(const std::string& name, std::vector<SubRun> runs, int workers) {
  SearchReport rep;
  rep.task = name;
  auto t0 = std::chrono::steady_clock::now();
  rep.workers = std::max(1, workers);
  std::map<std::string, SearchReport> cache;
  for (auto& r : runs) {
    std::string key = r.task.universe.describe() + "|" + predicate_name(r.task.predicate);
    auto it = cache.find(key);
    if (it == cache.end()) {
      SearchReport sub = run_search(r.task, workers);
      it = cache.emplace(key, std::move(sub)).first;
      rep.universes.push_back(r.task.universe.describe());
      rep.examined += it->second.examined;
      rep.matched += it->second.matched;
      for (auto& w : it->second.witnesses) rep.witnesses.push_back(w);
      for (auto& [k, v] : it->second.histogram) rep.histogram[k] += v;
      rep.witnesses_truncated |= it->second.witnesses_truncated;
    }
    const SearchReport& sub = it->second;
    Expectation e;
    e.name = r.expectation_name;
    switch (r.kind) {
      case SubRun::Kind::count_eq:
        e.expected = std::to_string(r.value);
        e.observed = std::to_string(sub.matched);
        e.pass = sub.matched == r.value;
        break;
      case SubRun::Kind::count_ge:
        e.expected = ">=" + std::to_string(r.value);
        e.observed = std::to_string(sub.matched);
        e.pass = sub.matched >= r.value;
        break;
      case SubRun::Kind::examined_eq:
        e.expected = std::to_string(r.value);
        e.observed = std::to_string(sub.examined);
        e.pass = sub.examined == r.value;
        break;
      case SubRun::Kind::hist_ge: {
        auto hit = sub.histogram.find(r.hist_key);
        std::uint64_t got = hit == sub.histogram.end() ? 0 : hit->second;
        e.expected = r.hist_key + ">=" + std::to_string(r.value);
        e.observed = std::to_string(got);
        e.pass = got >= r.value;
        break;
      }
    }
    rep.pass = rep.pass && e.pass;
    rep.expectations.push_back(std::move(e));
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end());
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

SearchTask make_task(std::string name, UniverseSpec universe, PredicateId pred,
                     bool witnesses, SearchTask::Histogram hist) {
  SearchTask t;
  t.name = std::move(name);
  t.universe = std::move(universe);
  t.predicate = pred;
  t.collect_witnesses = witnesses;
  t.histogram = hist;
  return t;
}

}  // namespace

std::vector<std::string> reproduce_task_names() {
  return {"interval-counts", "diam3-gap", "indivisible-11", "interval-11-2conn"};
}

SearchReport reproduce(const std::string& name, int workers, bool extended,
                       const std::string& g6_override) {
  const bool overridden = !g6_override.empty();
  if (name == "interval-counts") {
    if (overridden) fail(ErrorKind::BadParameter, "interval-counts runs on the built-in generator");
    const std::uint64_t expect[] = {1, 2, 13, 0};
    const std::uint64_t universe[] = {853, 11117, 261080, 11716571};  // connected graphs
    std::vector<SubRun> runs;
    for (int n = 7; n <= 10; ++n) {
      SubRun r;
      r.expectation_name = "interval irregular count, n=" + std::to_string(n);
      r.task = make_task("interval-counts", UniverseSpec::connected(n),
                         PredicateId::interval_irregular, true, SearchTask::Histogram::tr_interval);
      r.kind = SubRun::Kind::count_eq;
      r.value = expect[n - 7];
      runs.push_back(r);
      r.expectation_name = "connected graphs examined, n=" + std::to_string(n);
      r.kind = SubRun::Kind::examined_eq;
      r.value = universe[n - 7];
      runs.push_back(std::move(r));
    }
    return run_subtasks(name, std::move(runs), workers);
  }
  if (name == "diam3-gap") {
    if (overridden) fail(ErrorKind::BadParameter, "diam3-gap runs on the built-in generator");
    std::vector<SubRun> runs;
    // A diameter-3 graph needs at least 4 vertices.
    for (int n = 4; n <= 10; ++n) {
      SubRun r;
      r.expectation_name = "diam 3 and C_ec > C_W count, n=" + std::to_string(n);
      r.task = make_task("diam3-gap", UniverseSpec::connected(n), PredicateId::diam3_ec_gt_cw,
                         true, SearchTask::Histogram::none);
      r.kind = SubRun::Kind::count_eq;
      r.value = 0;
      runs.push_back(std::move(r));
    }
    return run_subtasks(name, std::move(runs), workers);
  }
  if (name == "indivisible-11") {
    if (!extended && !overridden)
      fail(ErrorKind::BadParameter,
           "indivisible-11 needs --extended (hours-scale n=11 sweep) or an external --g6 stream");
    UniverseSpec universe =
        overridden ? UniverseSpec::file(g6_override) : UniverseSpec::connected(11);
    std::vector<SubRun> runs;
    SubRun total;
    total.expectation_name = "transmission indivisible but not interval irregular, n=11";
    total.task = make_task("indivisible-11", universe, PredicateId::indivisible_not_interval,
                           true, SearchTask::Histogram::structure);
    total.kind = SubRun::Kind::count_eq;
    total.value = 221;
    runs.push_back(total);
    SubRun biconn = total;
    biconn.expectation_name = "of those, 2-connected";
    biconn.kind = SubRun::Kind::hist_ge;
    biconn.hist_key = "2-connected";
    biconn.value = 14;
    runs.push_back(biconn);
    SubRun trees = total;
    trees.expectation_name = "of those, trees";
    trees.kind = SubRun::Kind::hist_ge;  // expected 0; checked exactly below
    trees.hist_key = "tree";
    trees.value = 0;
    runs.push_back(trees);
    SearchReport rep = run_subtasks(name, std::move(runs), workers);
    // "trees >= 0" is vacuous; tighten to an exact-zero expectation.
    for (auto& e : rep.expectations)
      if (e.name == "of those, trees") {
        e.expected = "0";
        e.pass = e.observed == "0";
        rep.pass = rep.pass && e.pass;
      }
    // 2-connected must be exactly 14 when the full census is 221.
    for (auto& e : rep.expectations)
      if (e.name == "of those, 2-connected") {
        e.expected = "14";
        e.pass = e.observed == "14";
        rep.pass = rep.pass && e.pass;
      }
    return rep;
  }
  if (name == "interval-11-2conn") {
    if (!extended && !overridden)
      fail(ErrorKind::BadParameter,
           "interval-11-2conn needs --extended (hours-scale n=11 sweep) or an external --g6 stream");
    UniverseSpec universe =
        overridden ? UniverseSpec::file(g6_override) : UniverseSpec::connected(11);
    std::vector<SubRun> runs;
    SubRun total;
    total.expectation_name = "2-connected interval irregular graphs, n=11";
    total.task = make_task("interval-11-2conn", universe,
                           PredicateId::interval_irregular_biconnected, true,
                           SearchTask::Histogram::tr_interval);
    total.kind = SubRun::Kind::count_ge;
    total.value = 207;
    runs.push_back(total);
    const std::pair<const char*, std::uint64_t> intervals[] = {
        {"[13..23]", 154}, {"[15..25]", 51}, {"[17..27]", 2}};
    for (auto [key, cnt] : intervals) {
      SubRun h = total;
      h.expectation_name = std::string("transmission interval ") + key;
      h.kind = SubRun::Kind::hist_ge;
      h.hist_key = key;
      h.value = cnt;
      runs.push_back(h);
    }
    return run_subtasks(name, std::move(runs), workers);
  }
  fail(ErrorKind::UnknownTask, "unknown reproduction task '" + name + "'");
}

}  // namespace gcx
