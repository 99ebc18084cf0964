// gcx: graph complexity toolkit.
//
// Computes Wiener/eccentric complexity profiles, classifies graphs,
// constructs the supported graph families, runs exhaustive searches over the
// built-in isomorph-free generators or external graph6 streams, reproduces
// the registered census tasks, and runs the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 input/decode error.

#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcx/classify.hpp"
#include "gcx/codec.hpp"
#include "gcx/construct.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/harness.hpp"
#include "gcx/invariants.hpp"
#include "gcx/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct InputOpts {
  std::string family;
  std::string g6_path;
  std::string positional;  // "-" reads stdin, anything else is a graph6 path
  bool lenient = false;
  bool skip_errors = false;

  bool use_stdin() const { return positional == "-"; }
  std::string path() const {
    if (!g6_path.empty()) return g6_path;
    return positional == "-" ? std::string{} : positional;
  }
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("--family", in.family, "inline family spec, e.g. z:3 or bloom:cycle:5:2");
  cmd->add_option("--g6", in.g6_path, "graph6/sparse6 file");
  cmd->add_option("input", in.positional, "graph6/sparse6 file, or - for stdin");
  cmd->add_flag("--lenient", in.lenient, "tolerate nonzero padding bits when decoding");
  cmd->add_flag("--skip", in.skip_errors, "skip undecodable lines instead of aborting");
}

int count_sources(const InputOpts& in) {
  return (!in.family.empty() ? 1 : 0) + (!in.g6_path.empty() ? 1 : 0) +
         (!in.positional.empty() ? 1 : 0);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) gcx::fail(gcx::ErrorKind::BadParameter, "cannot open output '" + path + "'");
  return file;
}

// Applies fn to every input graph; one JSON line each.
int for_each_input(const InputOpts& in, std::ostream& out,
                   const std::function<json(const gcx::Graph&)>& fn) {
  gcx::DecodeOptions opts;
  opts.strict_padding = !in.lenient;
  if (!in.family.empty()) {
    gcx::Graph g = gcx::standard_family(gcx::FamilySpec::parse(in.family));
    out << fn(g).dump() << "\n";
    return kExitOk;
  }
  std::ifstream file;
  std::istream* stream = &std::cin;
  std::string path = in.path();
  if (!path.empty()) {
    file.open(path);
    if (!file) {
      std::cerr << "gcx: cannot open '" << path << "'\n";
      return kExitInput;
    }
    stream = &file;
  }
  gcx::GraphStreamReader reader(*stream,
                                in.skip_errors ? gcx::GraphStreamReader::OnError::skip
                                               : gcx::GraphStreamReader::OnError::abort,
                                opts);
  gcx::Graph g;
  while (reader.next(g)) out << fn(g).dump() << "\n";
  for (const auto& diag : reader.diagnostics()) std::cerr << "gcx: skipped " << diag << "\n";
  return kExitOk;
}

json profile_json(const gcx::Graph& g) {
  gcx::InvariantProfile p = gcx::profile(g);
  json j;
  j["graph6"] = gcx::encode_graph6(g);
  j["n"] = p.n;
  j["tr_set"] = p.tr_set;
  j["ec_set"] = p.ec_set;
  j["c_w"] = p.c_w;
  j["c_ec"] = p.c_ec;
  j["diam"] = p.diam;
  j["rad"] = p.rad;
  j["wiener"] = p.wiener;
  return j;
}

json classify_json(const gcx::Graph& g) {
  gcx::InvariantProfile p = gcx::profile(g);
  gcx::ClassificationReport r = gcx::classify(g, p);
  json j = profile_json(g);
  j["transmission_regular"] = r.transmission_regular;
  j["transmission_irregular"] = r.transmission_irregular;
  j["transmission_indivisible"] = r.transmission_indivisible;
  j["interval_irregular"] = r.interval_irregular;
  j["arithmetic_step"] = r.arithmetic_step ? json(*r.arithmetic_step) : json(nullptr);
  j["self_centered"] = r.self_centered;
  j["k_self_centered"] = r.k_self_centered ? json(*r.k_self_centered) : json(nullptr);
  j["bidegreed"] = r.bidegreed;
  j["center_regular_tree"] = r.center_regular_tree;
  json pairs = json::array();
  for (auto [u, v] : r.ud_pairs) pairs.push_back({u, v});
  j["ud_pairs"] = pairs;
  return j;
}

gcx::Shard parse_shard(const std::string& text) {
  gcx::Shard s;
  if (text.empty()) return s;
  auto slash = text.find('/');
  if (slash == std::string::npos)
    gcx::fail(gcx::ErrorKind::BadParameter, "shard must look like i/k");
  s.index = std::stoi(text.substr(0, slash));
  s.count = std::stoi(text.substr(slash + 1));
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph complexity toolkit"};
  app.require_subcommand(1);
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  app.add_option("--workers", workers, "worker threads (1 = sequential reference run)")
      ->capture_default_str();

  // profile / classify
  InputOpts profile_in, classify_in;
  std::string profile_out, classify_out;
  auto* cmd_profile = app.add_subcommand("profile", "per-graph invariant profile as JSON lines");
  add_input_flags(cmd_profile, profile_in);
  cmd_profile->add_option("--out", profile_out, "output file (default stdout)");
  auto* cmd_classify = app.add_subcommand("classify", "profile plus class membership flags");
  add_input_flags(cmd_classify, classify_in);
  cmd_classify->add_option("--out", classify_out, "output file (default stdout)");

  // construct / encode / decode
  std::string construct_family, construct_out;
  auto* cmd_construct = app.add_subcommand("construct", "emit a family graph as graph6");
  cmd_construct->add_option("--family", construct_family, "family spec, e.g. z:3")->required();
  cmd_construct->add_option("--out", construct_out, "output file (default stdout)");

  InputOpts encode_in;
  std::string encode_out;
  auto* cmd_encode =
      app.add_subcommand("encode", "JSON lines {\"n\":..,\"edges\":[[u,v],..]} to graph6");
  cmd_encode->add_option("--out", encode_out, "output file (default stdout)");
  cmd_encode->add_option("--json", encode_in.g6_path, "JSON-lines input file (default stdin)");

  InputOpts decode_in;
  std::string decode_out;
  auto* cmd_decode = app.add_subcommand("decode", "graph6/sparse6 lines to JSON edge lists");
  add_input_flags(cmd_decode, decode_in);
  cmd_decode->add_option("--out", decode_out, "output file (default stdout)");

  // search
  std::string search_universe, search_pred = "interval-irregular", search_out, search_shard;
  bool search_witnesses = false, search_extended = false, search_csv = false;
  std::string search_hist = "none";
  auto* cmd_search = app.add_subcommand("search", "predicate search over a universe");
  cmd_search->add_option("--universe", search_universe, "connected:N | trees:N | g6:FILE")
      ->required();
  cmd_search->add_option("--pred", search_pred, "predicate name (see --list)");
  cmd_search->add_flag("--witnesses", search_witnesses, "collect canonical graph6 witnesses");
  cmd_search->add_option("--hist", search_hist, "histogram: none | interval | structure");
  cmd_search->add_option("--shard", search_shard, "shard i/k of the generator universe");
  cmd_search->add_flag("--extended", search_extended, "allow n = 11 generator universes");
  cmd_search->add_option("--out", search_out, "report JSON file (default stdout)");
  cmd_search->add_flag("--csv", search_csv, "print CSV summary to stdout");
  bool search_list = false;
  cmd_search->add_flag("--list", search_list, "list predicate names and exit");

  // reproduce
  std::string repro_name, repro_out, repro_g6;
  bool repro_extended = false, repro_csv = false;
  auto* cmd_repro = app.add_subcommand("reproduce", "run a registered census task");
  cmd_repro->add_option("name", repro_name, "task name (see --list)");
  cmd_repro->add_flag("--extended", repro_extended, "enable the hours-scale n = 11 universes");
  cmd_repro->add_option("--g6", repro_g6, "external graph6 stream standing in for the universe");
  cmd_repro->add_option("--out", repro_out, "report JSON file (default stdout)");
  cmd_repro->add_flag("--csv", repro_csv, "print CSV summary to stdout");
  bool repro_list = false;
  cmd_repro->add_flag("--list", repro_list, "list task names and exit");

  // verify
  std::string verify_name = "all", verify_out;
  gcx::SuiteOptions suite_opts;
  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  cmd_verify->add_option("suite", verify_name, "suite name or 'all'");
  cmd_verify->add_option("--seed", suite_opts.seed, "seed for sampled pairs")
      ->capture_default_str();
  cmd_verify->add_option("--pairs", suite_opts.pair_budget, "random pair budget")
      ->capture_default_str();
  cmd_verify->add_option("--pair-max-order", suite_opts.pair_max_order, "max factor order")
      ->capture_default_str();
  cmd_verify->add_option("--tree-max", suite_opts.tree_max_n, "tree suite bound")
      ->capture_default_str();
  cmd_verify->add_option("--diam2-max", suite_opts.diam2_max_n, "diameter-2 suite bound")
      ->capture_default_str();
  cmd_verify->add_option("--out", verify_out, "suite JSON file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::ofstream out_file;
    if (cmd_profile->parsed()) {
      if (count_sources(profile_in) != 1) {
        std::cerr << "gcx: exactly one input source (--family, --g6, or -)\n";
        return kExitUsage;
      }
      return for_each_input(profile_in, open_output(profile_out, out_file), profile_json);
    }
    if (cmd_classify->parsed()) {
      if (count_sources(classify_in) != 1) {
        std::cerr << "gcx: exactly one input source (--family, --g6, or -)\n";
        return kExitUsage;
      }
      return for_each_input(classify_in, open_output(classify_out, out_file), classify_json);
    }
    if (cmd_construct->parsed()) {
      gcx::Graph g = gcx::standard_family(gcx::FamilySpec::parse(construct_family));
      open_output(construct_out, out_file) << gcx::encode_graph6(g) << "\n";
      return kExitOk;
    }
    if (cmd_encode->parsed()) {
      std::ifstream jin;
      std::istream* stream = &std::cin;
      if (!encode_in.g6_path.empty()) {
        jin.open(encode_in.g6_path);
        if (!jin) {
          std::cerr << "gcx: cannot open '" << encode_in.g6_path << "'\n";
          return kExitInput;
        }
        stream = &jin;
      }
      std::ostream& out = open_output(encode_out, out_file);
      std::string line;
      size_t line_no = 0;
      while (std::getline(*stream, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("n") || !j.contains("edges")) {
          std::cerr << "gcx: line " << line_no << ": expected {\"n\":..,\"edges\":[[u,v],..]}\n";
          return kExitInput;
        }
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j["edges"]) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        out << gcx::encode_graph6(gcx::build_graph(j["n"].get<int>(), edges)) << "\n";
      }
      return kExitOk;
    }
    if (cmd_decode->parsed()) {
      if (count_sources(decode_in) != 1) {
        std::cerr << "gcx: exactly one input source (--g6 or -)\n";
        return kExitUsage;
      }
      return for_each_input(decode_in, open_output(decode_out, out_file),
                            [](const gcx::Graph& g) {
                              json j;
                              j["graph6"] = gcx::encode_graph6(g);
                              j["n"] = g.order();
                              json edges = json::array();
                              for (auto [u, v] : g.edges()) edges.push_back({u, v});
                              j["edges"] = edges;
                              return j;
                            });
    }
    if (cmd_search->parsed()) {
      if (search_list) {
        for (const auto& p : gcx::predicate_names()) std::cout << p << "\n";
        return kExitOk;
      }
      gcx::SearchTask task;
      task.name = "search";
      task.universe = gcx::UniverseSpec::parse(search_universe);
      if (task.universe.kind == gcx::UniverseSpec::Kind::generator) {
        task.universe.gen.shard = parse_shard(search_shard);
        if (task.universe.gen.mode == gcx::GeneratorConfig::Mode::connected_graphs &&
            task.universe.gen.n >= 11 && !search_extended) {
          std::cerr << "gcx: connected:11 is an extended (hours-scale) run; pass --extended\n";
          return kExitUsage;
        }
      }
      task.predicate = gcx::predicate_from_name(search_pred);
      task.collect_witnesses = search_witnesses;
      if (search_hist == "interval")
        task.histogram = gcx::SearchTask::Histogram::tr_interval;
      else if (search_hist == "structure")
        task.histogram = gcx::SearchTask::Histogram::structure;
      else if (search_hist != "none") {
        std::cerr << "gcx: unknown histogram kind '" << search_hist << "'\n";
        return kExitUsage;
      }
      gcx::SearchReport rep = gcx::run_search(task, workers);
      open_output(search_out, out_file) << rep.to_json().dump(2) << "\n";
      if (search_csv) std::cout << rep.csv_summary();
      return kExitOk;
    }
    if (cmd_repro->parsed()) {
      if (repro_list) {
        for (const auto& t : gcx::reproduce_task_names()) std::cout << t << "\n";
        return kExitOk;
      }
      if (repro_name.empty()) {
        std::cerr << "gcx: reproduce needs a task name\n";
        return kExitUsage;
      }
      gcx::SearchReport rep = gcx::reproduce(repro_name, workers, repro_extended, repro_g6);
      open_output(repro_out, out_file) << rep.to_json().dump(2) << "\n";
      if (repro_csv) std::cout << rep.csv_summary();
      return rep.pass ? kExitOk : kExitVerifyFail;
    }
    if (cmd_verify->parsed()) {
      std::vector<std::string> names;
      if (verify_name == "all")
        names = gcx::suite_names();
      else
        names.push_back(verify_name);
      suite_opts.workers = workers;
      json all = json::array();
      bool pass = true;
      for (const auto& name : names) {
        gcx::SuiteResult r = gcx::run_suite(name, suite_opts);
        pass = pass && r.all_pass();
        all.push_back(r.to_json());
        for (const auto& chk : r.checks)
          std::cerr << (chk.pass ? "PASS " : "FAIL ") << r.suite << "/" << chk.claim << " ("
                    << chk.instances << " instances)"
                    << (chk.pass ? "" : ": " + chk.counterexample) << "\n";
      }
      open_output(verify_out, out_file) << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      return pass ? kExitOk : kExitVerifyFail;
    }
  } catch (const gcx::Error& e) {
    std::cerr << "gcx: " << e.what() << "\n";
    switch (e.kind()) {
      case gcx::ErrorKind::BadParameter:
      case gcx::ErrorKind::UnknownTask:
        return kExitUsage;
      default:
        return kExitInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "gcx: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
