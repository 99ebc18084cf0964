// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The extended n = 11 census (criterion 10) only runs with
// --extended (or GCX_EXTENDED=1); without it the desk-scale part is a
// cross-validation of the generator against the file path at order 8.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <thread>

#include "gcx/classify.hpp"
#include "gcx/codec.hpp"
#include "gcx/construct.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/harness.hpp"
#include "gcx/invariants.hpp"
#include "gcx/verify.hpp"
#include "oracles.hpp"

using namespace gcx;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool pass, double seconds,
            const std::string& detail = {}) {
  std::printf("%s criterion-%d %s (%.1fs)%s\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
              seconds, detail.empty() ? "" : (" " + detail).c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <class F>
void criterion(int number, const std::string& label, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(number, label, pass, secs, detail);
}

std::uint64_t generator_count(GeneratorConfig cfg) {
  std::uint64_t count = 0;
  Graph g;
  if (cfg.mode == GeneratorConfig::Mode::trees) {
    TreeGenerator gen(cfg);
    while (gen.next(g)) ++count;
  } else {
    ConnectedGraphGenerator gen(cfg);
    while (gen.next(g)) ++count;
  }
  return count;
}

std::string expectations_summary(const SearchReport& rep) {
  std::string out;
  for (const auto& e : rep.expectations)
    out += (out.empty() ? "" : "; ") + e.name + ": " + e.observed + " (want " + e.expected + ")";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) extended = true;
    if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) workers = std::atoi(argv[++i]);
  }
  if (const char* env = std::getenv("GCX_EXTENDED"); env && env[0] == '1') extended = true;
  std::printf("acceptance suite, %d worker(s)%s\n", workers, extended ? ", extended" : "");

  criterion(1, "interval irregular counts 1/2/13/0 for n = 7..10", [&](std::string& detail) {
    auto rep = reproduce("interval-counts", workers);
    detail = expectations_summary(rep);
    return rep.pass;
  });

  criterion(2, "no diameter-3 graph of order <= 10 has C_ec > C_W", [&](std::string& detail) {
    auto rep = reproduce("diam3-gap", workers);
    detail = expectations_summary(rep);
    return rep.pass;
  });

  criterion(3, "figure corpus profiles and classifications", [&](std::string& detail) {
    bool ok = true;
    auto expect = [&](bool cond, const char* what) {
      if (!cond) {
        ok = false;
        detail += std::string(detail.empty() ? "" : "; ") + what;
      }
    };
    expect(profile(corpus::branched_tree7()).tr ==
               std::vector<std::uint32_t>{18, 13, 10, 11, 14, 19, 15},
           "order-7 tree transmissions");
    expect(profile(corpus::branched_tree6()).tr ==
               std::vector<std::uint32_t>{13, 9, 7, 9, 13, 11},
           "order-6 tree transmissions");
    expect(profile(corpus::chorded_hexagon()).tr == std::vector<std::uint32_t>{9, 7, 7, 9, 7, 7},
           "chorded hexagon transmissions");
    auto p7 = profile(corpus::interval7());
    expect(p7.tr == std::vector<std::uint32_t>{7, 8, 9, 10, 11, 12, 13},
           "interval-7 transmissions");
    auto r7 = classify(corpus::interval7(), p7);
    expect(r7.interval_irregular && p7.tr_set.front() == 7 && p7.tr_set.back() == 13,
           "interval-7 classification");
    auto p8 = profile(corpus::interval8());
    expect(p8.tr == std::vector<std::uint32_t>{8, 9, 10, 11, 12, 13, 14, 15},
           "interval-8 transmissions");
    auto r8 = classify(corpus::interval8(), p8);
    expect(r8.interval_irregular && p8.tr_set.front() == 8 && p8.tr_set.back() == 15,
           "interval-8 classification");
    auto p11 = profile(corpus::indivisible11());
    expect(p11.tr == std::vector<std::uint32_t>{18, 26, 22, 24, 20, 21, 17, 23, 19, 16, 14},
           "indivisible-11 transmissions");
    auto r11 = classify(corpus::indivisible11(), p11);
    expect(r11.transmission_indivisible && !r11.interval_irregular,
           "indivisible-11 classification");
    expect(is_biconnected(corpus::indivisible11()), "indivisible-11 biconnectivity");
    return ok;
  });

  criterion(4, "family formulas: punctured cubes, Z_k, Z powers", [&](std::string& detail) {
    bool ok = true;
    for (int d = 2; d <= 10 && ok; ++d) {
      auto p = profile(hypercube_minus(d));
      if (p.c_w - p.c_ec != d - 2) {
        ok = false;
        detail = "punctured cube gap off at d=" + std::to_string(d);
      }
    }
    for (int k = 1; k <= 20 && ok; ++k) {
      auto p = profile(z_graph(k));
      std::uint32_t cyc = (k + 1) * (k + 1) + k + 3;
      std::uint32_t pen = (k + 1) * (k + 1) + 3 * k + 5;
      if (p.tr_set != std::vector<std::uint32_t>{cyc, pen} ||
          p.ec_set != std::vector<std::uint16_t>{static_cast<std::uint16_t>(k + 1),
                                                 static_cast<std::uint16_t>(k + 2),
                                                 static_cast<std::uint16_t>(k + 3)}) {
        ok = false;
        detail = "Z_k formulas off at k=" + std::to_string(k);
      }
    }
    for (int k = 0; k <= 2 && ok; ++k) {
      int m = 1 << k;
      auto p = profile(cartesian_power(z_graph(1), m));
      if (p.c_ec != 2 * m + 1 || p.c_w != m + 1) {
        ok = false;
        detail = "Z power complexities off at k=" + std::to_string(k);
      }
    }
    return ok;
  });

  criterion(5, "C_ec - C_W over Y_k x Z_k equals 1, 0, 0, -2 for k = 2..5",
            [&](std::string& detail) {
              const int want[] = {1, 0, 0, -2};
              for (int k = 2; k <= 5; ++k) {
                auto p = profile(cartesian_product(y_graph(k), z_graph(k)));
                if (p.c_ec - p.c_w != want[k - 2]) {
                  detail = "k=" + std::to_string(k) + " diff=" + std::to_string(p.c_ec - p.c_w);
                  return false;
                }
              }
              return true;
            });

  criterion(6, "product identity suite at full budget", [&](std::string& detail) {
    SuiteOptions opts;
    opts.workers = workers;
    auto r = product_identity_suite(opts);
    for (const auto& c : r.checks)
      if (!c.pass) detail += c.claim + ": " + c.counterexample + "; ";
    return r.all_pass();
  });

  criterion(7, "tree theorem over all free trees with n <= 14 (equality iff center-regular)",
            [&](std::string& detail) {
              SuiteOptions opts;
              opts.tree_max_n = 14;
              opts.workers = workers;
              auto r = tree_suite(opts);
              for (const auto& c : r.checks)
                if (!c.pass) detail += c.claim + " first counterexample " + c.counterexample + "; ";
              if (!r.all_pass())
                detail +=
                    "[the inequality and the center-regular => equality direction hold "
                    "exhaustively; the stated equivalence has counterexamples starting with the "
                    "order-8 spider with legs 3,3,1]";
              return r.all_pass();
            });

  criterion(8, "generator counts vs published sequences and the brute-force oracle",
            [&](std::string& detail) {
              const std::uint64_t graphs[] = {1, 1, 2, 6, 21, 112, 853, 11117, 261080};
              for (int n = 1; n <= 9; ++n) {
                GeneratorConfig cfg;
                cfg.n = n;
                if (generator_count(cfg) != graphs[n - 1]) {
                  detail = "connected count off at n=" + std::to_string(n);
                  return false;
                }
              }
              const std::uint64_t trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
              for (int n = 1; n <= 10; ++n) {
                GeneratorConfig cfg;
                cfg.n = n;
                cfg.mode = GeneratorConfig::Mode::trees;
                if (generator_count(cfg) != trees[n - 1]) {
                  detail = "tree count off at n=" + std::to_string(n);
                  return false;
                }
              }
              for (int n = 1; n <= 7; ++n) {
                if (oracle::count_connected_classes(n) !=
                    static_cast<long long>(graphs[n - 1])) {
                  detail = "oracle disagrees on connected n=" + std::to_string(n);
                  return false;
                }
              }
              for (int n = 1; n <= 8; ++n) {
                if (oracle::count_tree_classes(n) != static_cast<long long>(trees[n - 1])) {
                  detail = "oracle disagrees on trees n=" + std::to_string(n);
                  return false;
                }
              }
              return true;
            });

  criterion(9, "graph6 conformance and round-trips", [&](std::string& detail) {
    if (encode_graph6(complete_graph(1)) != "@" || decode_graph6("@").order() != 1 ||
        !decode_graph6("A_").has_edge(0, 1) || decode_graph6("A?").edge_count() != 0) {
      detail = "fixed records off";
      return false;
    }
    for (int n = 1; n <= 7; ++n) {
      GeneratorConfig cfg;
      cfg.n = n;
      ConnectedGraphGenerator gen(cfg);
      Graph g;
      while (gen.next(g))
        if (!(decode_graph6(encode_graph6(g)) == g)) {
          detail = "round-trip failure at n=" + std::to_string(n);
          return false;
        }
    }
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 10000; ++i) {
      int n = std::uniform_int_distribution<int>(0, 50)(rng);
      Graph::Builder b(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() & 1) b.add_edge(u, v);
      Graph g = std::move(b).build();
      if (!(decode_graph6(encode_graph6(g)) == g)) {
        detail = "random round-trip failure";
        return false;
      }
    }
    return true;
  });

  {
    // Criterion 10: generator-vs-stream cross-validation at order 8 always
    // runs; the n = 11 census itself only with --extended.
    auto t0 = std::chrono::steady_clock::now();
    bool cross_ok = false;
    std::string detail;
    try {
      std::string path = "/tmp/gcx_acceptance_order8.g6";
      {
        std::ofstream out(path);
        GeneratorConfig cfg;
        cfg.n = 8;
        ConnectedGraphGenerator gen(cfg);
        Graph g;
        while (gen.next(g)) out << encode_graph6(g) << "\n";
      }
      SearchTask gen_task;
      gen_task.name = "xval";
      gen_task.universe = UniverseSpec::connected(8);
      gen_task.predicate = PredicateId::indivisible_not_interval;
      gen_task.collect_witnesses = true;
      gen_task.histogram = SearchTask::Histogram::structure;
      SearchTask file_task = gen_task;
      file_task.universe = UniverseSpec::file(path);
      auto a = run_search(gen_task, workers);
      auto b = run_search(file_task, workers);
      cross_ok = a.examined == b.examined && a.matched == b.matched &&
                 a.witnesses == b.witnesses && a.histogram == b.histogram;
      std::remove(path.c_str());
      if (!cross_ok) detail = "order-8 cross-validation mismatch";
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!extended) {
      std::printf("%s criterion-10 extended n=11 census skipped (desk-scale run); order-8 "
                  "cross-validation %s (%.1fs)%s\n",
                  cross_ok ? "SKIP" : "FAIL", cross_ok ? "passed" : "failed", secs,
                  detail.empty() ? "" : (" " + detail).c_str());
      if (!cross_ok) ++failures;
    } else if (!cross_ok) {
      report(10, "order-8 cross-validation before the long run", false, secs, detail);
    } else {
      criterion(10, "n = 11 census: 221 indivisible (14 biconnected, 0 trees); >= 207 "
                    "interval 2-connected with histogram 154/51/2",
                [&](std::string& d) {
                  auto a = reproduce("indivisible-11", workers, true);
                  auto b = reproduce("interval-11-2conn", workers, true);
                  d = expectations_summary(a) + "; " + expectations_summary(b);
                  return a.pass && b.pass;
                });
    }
  }

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                    : "acceptance: FAILURES present");
  return failures == 0 ? 0 : 1;
}
