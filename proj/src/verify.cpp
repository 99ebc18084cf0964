#include "gcx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

#include "gcx/classify.hpp"
#include "gcx/codec.hpp"
#include "gcx/construct.hpp"
#include "gcx/enumerate.hpp"

namespace gcx {

namespace corpus {

namespace {
Graph from_list(int n, std::initializer_list<std::pair<int, int>> edges, const char* label) {
  return build_graph(n, std::vector<std::pair<int, int>>(edges), label);
}
}  // namespace

Graph branched_tree7() {
  return from_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}}, "branched-tree-7");
}

Graph branched_tree6() {
  return from_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}, "branched-tree-6");
}

Graph chorded_hexagon() {
  return from_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 5}, {2, 4}},
                   "chorded-hexagon");
}

Graph interval7() {
  return from_list(
      7, {{2, 1}, {1, 0}, {0, 4}, {4, 2}, {2, 0}, {0, 5}, {0, 3}, {3, 1}, {1, 6}}, "interval-7");
}

Graph interval8() {
  return from_list(8,
                   {{2, 1}, {1, 3}, {3, 0}, {0, 5}, {5, 2}, {3, 2}, {2, 0}, {0, 6}, {0, 4},
                    {4, 1}, {1, 0}, {1, 7}},
                   "interval-8");
}

Graph indivisible11() {
  return from_list(11,
                   {{9, 10}, {10, 5}, {5, 1}, {1, 8}, {8, 0}, {0, 10}, {10, 6}, {6, 9}, {9, 2},
                    {2, 7}, {7, 3}, {3, 9}, {9, 7}, {4, 10}, {10, 8}, {8, 4}, {4, 0}, {0, 6},
                    {6, 2}},
                   "indivisible-11");
}

}  // namespace corpus

bool SuiteResult::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["pass"] = all_pass();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"claim", c.claim},
                   {"statement", c.statement},
                   {"instances", c.instances},
                   {"pass", c.pass},
                   {"counterexample", c.counterexample}});
  j["checks"] = arr;
  return j;
}

namespace {

struct Checker {
  long long instances = 0;
  bool pass = true;
  std::string counterexample;

  void require(bool ok, const std::string& witness) {
    ++instances;
    if (!ok && pass) {
      pass = false;
      counterexample = witness;
    }
  }
};

struct PendingCheck {
  std::string claim;
  std::string statement;
  std::function<void(Checker&)> body;
};

SuiteResult run_checks(std::string suite, std::uint64_t seed, std::vector<PendingCheck> pending,
                       int workers) {
  SuiteResult r;
  r.suite = std::move(suite);
  r.seed = seed;
  r.checks.resize(pending.size());
  std::atomic<size_t> cursor{0};
  auto work = [&]() {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= pending.size()) break;
      Checker c;
      try {
        pending[i].body(c);
      } catch (const std::exception& e) {
        c.pass = false;
        ++c.instances;
        if (c.counterexample.empty()) c.counterexample = std::string("exception: ") + e.what();
      }
      r.checks[i] = {pending[i].claim, pending[i].statement, c.instances, c.pass,
                     c.counterexample};
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::sort(r.checks.begin(), r.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.claim < b.claim; });
  return r;
}

std::string g6(const Graph& g) { return encode_graph6(g); }

std::string pair_witness(const Graph& g, const Graph& h, const std::string& detail) {
  return "G=" + g6(g) + " H=" + g6(h) + (detail.empty() ? "" : " " + detail);
}

Graph random_connected(std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> order_dist(1, max_order);
  std::uniform_real_distribution<double> p_dist(0.15, 0.85);
  for (;;) {
    int n = order_dist(rng);
    double p = p_dist(rng);
    Graph::Builder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (std::uniform_real_distribution<double>(0, 1)(rng) < p) b.add_edge(u, v);
    Graph g = std::move(b).build();
    if (is_connected(g)) return g;
  }
}

long long binom2(long long x) { return x * (x - 1) / 2; }

}  // namespace

SuiteResult product_identity_suite(const SuiteOptions& opts) {
  // Fixed corpus plus seeded random pairs.
  auto fixed = std::make_shared<std::vector<Graph>>();
  fixed->push_back(complete_graph(1));
  fixed->push_back(complete_graph(2));
  fixed->push_back(path_graph(3));
  fixed->push_back(path_graph(4));
  fixed->push_back(cycle_graph(4));
  fixed->push_back(cycle_graph(5));
  fixed->push_back(paw_graph());
  fixed->push_back(complete_graph(4));
  fixed->push_back(star_graph(4));
  fixed->push_back(hypercube(3));
  fixed->push_back(z_graph(1));
  fixed->push_back(corpus::chorded_hexagon());
  fixed->push_back(corpus::branched_tree6());

  auto pairs = std::make_shared<std::vector<std::pair<Graph, Graph>>>();
  for (size_t i = 0; i < fixed->size(); ++i)
    for (size_t j = i; j < fixed->size(); ++j) pairs->emplace_back((*fixed)[i], (*fixed)[j]);
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < opts.pair_budget; ++i) {
    Graph a = random_connected(rng, opts.pair_max_order);
    Graph b = random_connected(rng, opts.pair_max_order);
    pairs->emplace_back(std::move(a), std::move(b));
  }

  std::vector<PendingCheck> checks;

  checks.push_back(
      {"distance-additivity",
       "d((g,h),(g',h')) = d_G(g,g') + d_H(h,h') on Cartesian products",
       [pairs](Checker& c) {
         for (const auto& [g, h] : *pairs) {
           Graph p = cartesian_product(g, h);
           DistanceMatrix dg = all_pairs_distances(g);
           DistanceMatrix dh = all_pairs_distances(h);
           DistanceMatrix dp = all_pairs_distances(p);
           const int nh = h.order();
           bool ok = true;
           for (int a = 0; a < p.order() && ok; ++a)
             for (int b = 0; b < p.order() && ok; ++b)
               if (dp.at(a, b) != dg.at(a / nh, b / nh) + dh.at(a % nh, b % nh)) ok = false;
           c.require(ok, pair_witness(g, h, "distance mismatch"));
         }
       }});

  checks.push_back(
      {"transmission-product-formula",
       "Tr((g,h)) = n(H) Tr_G(g) + n(G) Tr_H(h) on Cartesian products",
       [pairs](Checker& c) {
         for (const auto& [g, h] : *pairs) {
           Graph p = cartesian_product(g, h);
           auto pg = profile(g), ph = profile(h), pp = profile(p);
           const int nh = h.order();
           bool ok = true;
           for (int a = 0; a < p.order() && ok; ++a)
             if (pp.tr[a] != static_cast<std::uint64_t>(h.order()) * pg.tr[a / nh] +
                                 static_cast<std::uint64_t>(g.order()) * ph.tr[a % nh])
               ok = false;
           c.require(ok, pair_witness(g, h, "transmission mismatch"));
         }
       }});

  checks.push_back(
      {"ec-complexity-product", "C_ec(G x H) = C_ec(G) + C_ec(H) - 1",
       [pairs](Checker& c) {
         for (const auto& [g, h] : *pairs) {
           auto pp = profile(cartesian_product(g, h));
           int want = profile(g).c_ec + profile(h).c_ec - 1;
           c.require(pp.c_ec == want,
                     pair_witness(g, h,
                                  "C_ec=" + std::to_string(pp.c_ec) + " expected " +
                                      std::to_string(want)));
         }
       }});

  checks.push_back(
      {"wiener-complexity-bounds",
       "max(C_W(G), C_W(H)) <= C_W(G x H) <= C_W(G) C_W(H)",
       [pairs](Checker& c) {
         for (const auto& [g, h] : *pairs) {
           int cw = profile(cartesian_product(g, h)).c_w;
           int cg = profile(g).c_w, ch = profile(h).c_w;
           c.require(std::max(cg, ch) <= cw && cw <= cg * ch,
                     pair_witness(g, h, "C_W=" + std::to_string(cw)));
         }
       }});

  checks.push_back(
      {"wiener-complexity-lower", "C_W(G x H) >= C_W(G) + C_W(H) - 1",
       [pairs](Checker& c) {
         for (const auto& [g, h] : *pairs) {
           int cw = profile(cartesian_product(g, h)).c_w;
           int cg = profile(g).c_w, ch = profile(h).c_w;
           c.require(cw >= cg + ch - 1, pair_witness(g, h, "C_W=" + std::to_string(cw)));
         }
       }});

  checks.push_back(
      {"ec-complexity-power", "C_ec(G^(2^k)) = 2^k C_ec(G) - 2^k + 1",
       [](Checker& c) {
         std::vector<Graph> bases;
         bases.push_back(complete_graph(2));
         bases.push_back(path_graph(3));
         bases.push_back(paw_graph());
         bases.push_back(z_graph(1));
         for (const auto& g : bases) {
           int ce = profile(g).c_ec;
           for (int k = 1; k <= 2; ++k) {
             long long m = 1 << k;
             long long order = 1;
             for (int i = 0; i < m; ++i) order *= g.order();
             if (order > 300) break;
             auto pp = profile(cartesian_power(g, static_cast<int>(m)));
             long long want = m * ce - m + 1;
             c.require(pp.c_ec == want,
                       "G=" + g6(g) + " k=" + std::to_string(k) + " C_ec=" +
                           std::to_string(pp.c_ec));
           }
         }
       }});

  return run_checks("product-identity", opts.seed, std::move(checks), opts.workers);
}

SuiteResult product_equality_suite(const SuiteOptions& opts) {
  std::vector<PendingCheck> checks;

  checks.push_back(
      {"arithmetic-subset-product",
       "C_W(G x H) = C_W(G) + C_W(H) - 1 for equal-order arithmetic transmission graphs with "
       "Tr(H) within Tr(G)",
       [](Checker& c) {
         std::vector<std::pair<Graph, Graph>> insts;
         insts.emplace_back(corpus::branched_tree6(), corpus::chorded_hexagon());
         insts.emplace_back(path_graph(3), path_graph(3));
         for (const auto& [g, h] : insts) {
           auto pg = profile(g), ph = profile(h);
           bool hyp = g.order() == h.order() && arithmetic_step(pg).has_value() &&
                      arithmetic_step(ph).has_value() &&
                      std::includes(pg.tr_set.begin(), pg.tr_set.end(), ph.tr_set.begin(),
                                    ph.tr_set.end());
           c.require(hyp, pair_witness(g, h, "hypothesis violated"));
           int cw = profile(cartesian_product(g, h)).c_w;
           c.require(cw == pg.c_w + ph.c_w - 1,
                     pair_witness(g, h, "C_W=" + std::to_string(cw)));
         }
       }});

  checks.push_back(
      {"coprime-indivisible-product",
       "C_W(G x H) = C_W(G) C_W(H) when G is transmission indivisible and gcd(n(G), n(H)) = 1",
       [](Checker& c) {
         std::vector<std::pair<Graph, Graph>> insts;
         insts.emplace_back(corpus::interval7(), cycle_graph(6));
         insts.emplace_back(corpus::interval7(), path_graph(4));
         insts.emplace_back(corpus::interval7(), paw_graph());
         insts.emplace_back(corpus::interval8(), cycle_graph(3));
         insts.emplace_back(corpus::interval8(), path_graph(3));
         for (const auto& [g, h] : insts) {
           auto pg = profile(g), ph = profile(h);
           bool hyp = is_transmission_indivisible(pg) &&
                      std::gcd(g.order(), h.order()) == 1;
           c.require(hyp, pair_witness(g, h, "hypothesis violated"));
           int cw = profile(cartesian_product(g, h)).c_w;
           c.require(cw == pg.c_w * ph.c_w, pair_witness(g, h, "C_W=" + std::to_string(cw)));
         }
       }});

  checks.push_back(
      {"prime-order-family",
       "for transmission indivisible G, factors of prime order above n(G) keep "
       "C_W multiplicative",
       [](Checker& c) {
         Graph g = corpus::interval7();
         auto pg = profile(g);
         std::vector<Graph> hs;
         hs.push_back(cycle_graph(11));
         hs.push_back(cycle_graph(13));
         hs.push_back(path_graph(11));
         hs.push_back(path_graph(13));
         for (const auto& h : hs) {
           auto ph = profile(h);
           int cw = profile(cartesian_product(g, h)).c_w;
           c.require(cw == pg.c_w * ph.c_w, pair_witness(g, h, "C_W=" + std::to_string(cw)));
         }
       }});

  checks.push_back(
      {"arithmetic-power", "C_W(G^(2^k)) = 2^k C_W(G) - 2^k + 1 for arithmetic transmission G",
       [](Checker& c) {
         struct Base {
           Graph g;
           int max_k;
         };
         std::vector<Base> bases;
         bases.push_back({path_graph(3), 2});
         bases.push_back({path_graph(4), 2});
         bases.push_back({z_graph(1), 1});
         bases.push_back({corpus::branched_tree6(), 1});
         for (const auto& [g, max_k] : bases) {
           auto pg = profile(g);
           c.require(arithmetic_step(pg).has_value(), g6(g) + " not arithmetic");
           for (int k = 0; k <= max_k; ++k) {
             int m = 1 << k;
             auto pp = profile(cartesian_power(g, m));
             long long want = static_cast<long long>(m) * pg.c_w - m + 1;
             c.require(pp.c_w == want,
                       "G=" + g6(g) + " k=" + std::to_string(k) + " C_W=" +
                           std::to_string(pp.c_w));
           }
         }
       }});

  checks.push_back(
      {"arithmetic-step-separated",
       "C_W(G x H) = C_W(G) C_W(H) for arithmetic transmission G, H with "
       "n(H) (C_W(G)-1) a < n(G) b",
       [](Checker& c) {
         struct Entry {
           Graph g;
           InvariantProfile p;
           std::uint32_t step;
         };
         std::vector<Entry> arith;
         for (int n = 2; n <= 6; ++n) {
           GeneratorConfig cfg;
           cfg.n = n;
           ConnectedGraphGenerator gen(cfg);
           Graph g;
           while (gen.next(g)) {
             auto p = profile(g);
             auto step = arithmetic_step(p);
             if (step) arith.push_back({g, std::move(p), *step});
           }
         }
         for (const auto& ge : arith)
           for (const auto& he : arith) {
             // hypothesis: n(H) (C_W(G)-1) a < n(G) b
             long long lhs = static_cast<long long>(he.g.order()) * (ge.p.c_w - 1) * ge.step;
             long long rhs = static_cast<long long>(ge.g.order()) * he.step;
             if (lhs >= rhs) continue;
             int cw = profile(cartesian_product(ge.g, he.g)).c_w;
             c.require(cw == ge.p.c_w * he.p.c_w,
                       pair_witness(ge.g, he.g, "C_W=" + std::to_string(cw)));
           }
       }});

  checks.push_back(
      {"wiener-stability-regular-factor",
       "C_W(G x H) = C_W(G) when C_W(H) = 1",
       [](Checker& c) {
         std::vector<std::pair<Graph, Graph>> insts;
         insts.emplace_back(z_graph(1), cycle_graph(4));
         insts.emplace_back(paw_graph(), complete_graph(4));
         insts.emplace_back(corpus::interval7(), cycle_graph(6));
         insts.emplace_back(path_graph(5), hypercube(3));
         for (const auto& [g, h] : insts) {
           auto ph = profile(h);
           c.require(ph.c_w == 1, pair_witness(g, h, "factor is not transmission regular"));
           int cw = profile(cartesian_product(g, h)).c_w;
           c.require(cw == profile(g).c_w, pair_witness(g, h, "C_W=" + std::to_string(cw)));
         }
       }});

  return run_checks("product-equality", opts.seed, std::move(checks), opts.workers);
}

SuiteResult tree_suite(const SuiteOptions& opts) {
  const int max_n = opts.tree_max_n;
  if (max_n < 1 || max_n > kMaxTreeOrder)
    fail(ErrorKind::BadParameter, "tree suite supports 1 <= max_n <= 18");
  std::vector<PendingCheck> checks;
  checks.push_back(
      {"tree-ec-le-cw", "C_ec(T) <= C_W(T) for every free tree",
       [max_n](Checker& c) {
         for (int n = 1; n <= max_n; ++n) {
           GeneratorConfig cfg;
           cfg.n = n;
           cfg.mode = GeneratorConfig::Mode::trees;
           TreeGenerator gen(cfg);
           Graph t;
           while (gen.next(t)) {
             auto p = profile(t);
             c.require(p.c_ec <= p.c_w, g6(t));
           }
         }
       }});
  checks.push_back(
      {"tree-center-regular-implies-equality",
       "center-regular trees have C_ec(T) = C_W(T)",
       [max_n](Checker& c) {
         for (int n = 1; n <= max_n; ++n) {
           GeneratorConfig cfg;
           cfg.n = n;
           cfg.mode = GeneratorConfig::Mode::trees;
           TreeGenerator gen(cfg);
           Graph t;
           while (gen.next(t)) {
             auto p = profile(t);
             if (is_center_regular_tree(t)) c.require(p.c_ec == p.c_w, g6(t));
           }
         }
       }});
  // The converse is stated as an equivalence, but it fails: the smallest
  // counterexample is the order-8 spider with legs 3, 3, 1, where the short
  // leg's transmission collides with a radial-path value (C_ec = C_W = 4
  // without center-regularity). The check is kept as stated and reports the
  // violations it finds.
  checks.push_back(
      {"tree-equality-iff-center-regular",
       "C_ec(T) = C_W(T) exactly when T is a center-regular tree",
       [max_n](Checker& c) {
         for (int n = 1; n <= max_n; ++n) {
           GeneratorConfig cfg;
           cfg.n = n;
           cfg.mode = GeneratorConfig::Mode::trees;
           TreeGenerator gen(cfg);
           Graph t;
           while (gen.next(t)) {
             auto p = profile(t);
             c.require((p.c_ec == p.c_w) == is_center_regular_tree(t), g6(t));
           }
         }
       }});
  return run_checks("trees", opts.seed, std::move(checks), opts.workers);
}

SuiteResult diam2_suite(const SuiteOptions& opts) {
  const int max_n = opts.diam2_max_n;
  if (max_n < 1 || max_n > 9)
    fail(ErrorKind::BadParameter, "diam2 suite supports 1 <= max_n <= 9");

  // One exhaustive sweep shared by all four checks.
  struct Case {
    Graph g;
    InvariantProfile p;
  };
  auto cases = std::make_shared<std::vector<Case>>();
  for (int n = 1; n <= max_n; ++n) {
    GeneratorConfig cfg;
    cfg.n = n;
    ConnectedGraphGenerator gen(cfg);
    Graph g;
    while (gen.next(g)) {
      auto p = profile(g);
      if (p.diam == 2) cases->push_back({g, std::move(p)});
    }
  }

  std::vector<PendingCheck> checks;
  checks.push_back(
      {"diam2-transmission-degree",
       "diam 2 and ec(v) = 2 give Tr(v) = 2n - 2 - deg(v)",
       [cases](Checker& c) {
         for (const auto& [g, p] : *cases) {
           bool ok = true;
           for (int v = 0; v < g.order() && ok; ++v)
             if (p.ec[v] == 2 &&
                 p.tr[v] != static_cast<std::uint32_t>(2 * g.order() - 2 - g.degree_of(v)))
               ok = false;
           c.require(ok, g6(g));
         }
       }});
  checks.push_back(
      {"diam2-cw-dominates", "diam 2 implies C_ec <= C_W",
       [cases](Checker& c) {
         for (const auto& [g, p] : *cases) c.require(p.c_ec <= p.c_w, g6(g));
       }});
  checks.push_back(
      {"regular-2-self-centered", "regular 2-self-centered graphs have C_W = C_ec = 1",
       [cases](Checker& c) {
         for (const auto& [g, p] : *cases) {
           int d0 = g.degree_of(0);
           bool regular = true;
           for (int v = 1; v < g.order(); ++v)
             if (g.degree_of(v) != d0) regular = false;
           if (!regular || p.c_ec != 1 || p.rad != 2) continue;
           c.require(p.c_w == 1 && p.c_ec == 1, g6(g));
         }
       }});
  checks.push_back(
      {"bidegreed-diam2",
       "bidegreed non-self-centered graphs of diameter 2 have C_W = C_ec = 2",
       [cases](Checker& c) {
         for (const auto& [g, p] : *cases) {
           std::vector<int> degs(g.order());
           for (int v = 0; v < g.order(); ++v) degs[v] = g.degree_of(v);
           std::sort(degs.begin(), degs.end());
           degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
           if (degs.size() != 2 || p.c_ec == 1) continue;
           c.require(p.c_w == 2 && p.c_ec == 2, g6(g));
         }
       }});
  return run_checks("diam2", opts.seed, std::move(checks), opts.workers);
}

SuiteResult family_suite(const SuiteOptions& opts) {
  std::vector<PendingCheck> checks;

  checks.push_back(
      {"cube-minus-gap", "C_W(Q_d minus a vertex) - C_ec = d - 2, for d = 2..10",
       [](Checker& c) {
         for (int d = 2; d <= 10; ++d) {
           Graph q = hypercube_minus(d);
           auto p = profile(q);
           c.require(p.c_w - p.c_ec == d - 2,
                     "d=" + std::to_string(d) + " C_W=" + std::to_string(p.c_w) +
                         " C_ec=" + std::to_string(p.c_ec));
           // all-ones vertex has eccentricity d-1, everything else d
           bool ecc_ok = p.ec[(1 << d) - 2] == d - 1;
           for (int v = 0; v < q.order() && ecc_ok; ++v)
             if (v != (1 << d) - 2 && p.ec[v] != d) ecc_ok = false;
           c.require(ecc_ok, "d=" + std::to_string(d) + " eccentricities off");
         }
       }});

  checks.push_back(
      {"z-family-formulas",
       "Z_k: cycle transmissions (k+1)^2+k+3, pendant transmissions (k+1)^2+3k+5, "
       "Ec = {k+1,k+2,k+3}",
       [](Checker& c) {
         for (int k = 1; k <= 20; ++k) {
           Graph z = z_graph(k);
           auto p = profile(z);
           std::uint32_t cyc_tr = (k + 1) * (k + 1) + k + 3;
           std::uint32_t pen_tr = (k + 1) * (k + 1) + 3 * k + 5;
           bool tr_ok = p.tr_set.size() == 2 && p.tr_set[0] == cyc_tr && p.tr_set[1] == pen_tr;
           bool ec_ok = p.ec_set.size() == 3 && p.ec_set[0] == k + 1 && p.ec_set[1] == k + 2 &&
                        p.ec_set[2] == k + 3;
           c.require(tr_ok && ec_ok && p.c_ec - p.c_w == 1, "k=" + std::to_string(k));
         }
       }});

  // The pendants of Z_k always have equal transmissions, but they are a
  // universally diametrical pair only for k <= 2: from k = 3 on, a cycle
  // vertex a quarter of the way around has only its cycle antipode in its
  // eccentric set.
  checks.push_back(
      {"z-ud-pendant-pair",
       "the pendants of Z_k have equal transmissions and form a UD pair exactly for k <= 2",
       [](Checker& c) {
         for (int k = 1; k <= 6; ++k) {
           Graph z = z_graph(k);
           auto p = profile(z);
           int u = 2 * k + 2, v = 2 * k + 3;
           auto pairs = ud_pairs(z);
           bool found = std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) != pairs.end();
           c.require(p.tr[u] == p.tr[v], "k=" + std::to_string(k) + " pendant transmissions");
           c.require(found == (k <= 2), "k=" + std::to_string(k) + " UD status");
         }
       }});

  checks.push_back(
      {"z-power-gap", "C_ec(Z^(2^k)) = 2^(k+1)+1 and C_W(Z^(2^k)) = 2^k+1 for k = 0..2",
       [](Checker& c) {
         Graph z = z_graph(1);
         for (int k = 0; k <= 2; ++k) {
           int m = 1 << k;
           auto p = profile(cartesian_power(z, m));
           c.require(p.c_ec == 2 * m + 1 && p.c_w == m + 1,
                     "k=" + std::to_string(k) + " C_ec=" + std::to_string(p.c_ec) +
                         " C_W=" + std::to_string(p.c_w));
         }
       }});

  checks.push_back(
      {"gap-preserved-by-regular-factor",
       "C_ec > C_W survives multiplying by hypercubes",
       [](Checker& c) {
         Graph z = z_graph(1);
         for (int d = 1; d <= 3; ++d) {
           auto p = profile(cartesian_product(z, hypercube(d)));
           c.require(p.c_ec == 3 && p.c_w == 2 && p.c_ec > p.c_w, "d=" + std::to_string(d));
         }
       }});

  checks.push_back(
      {"kn-minus-matching",
       "K_n minus k <= n/2 matching edges has C_W = C_ec (1 for a perfect matching, else 2)",
       [](Checker& c) {
         for (int n = 4; n <= 9; ++n)
           for (int k = 1; k <= n / 2; ++k) {
             Graph g = complete_minus_edges(n, k);
             auto p = profile(g);
             int want = (2 * k == n) ? 1 : 2;
             c.require(p.c_w == want && p.c_ec == want,
                       "n=" + std::to_string(n) + " k=" + std::to_string(k));
           }
       }});

  // A pendant's transmission always exceeds its support's by (order - 2);
  // for a bloom of a host of order n that is n(k+1) - 2.
  checks.push_back(
      {"bloom-complexities",
       "k pendants on every vertex of a vertex-transitive graph give C_ec = C_W = 2, "
       "pendant transmissions exceed host ones by n(k+1)-2",
       [](Checker& c) {
         std::vector<Graph> hosts;
         hosts.push_back(cycle_graph(4));
         hosts.push_back(cycle_graph(5));
         hosts.push_back(cycle_graph(6));
         hosts.push_back(cycle_graph(8));
         hosts.push_back(complete_graph(4));
         hosts.push_back(complete_graph(5));
         hosts.push_back(hypercube(3));
         for (const auto& host : hosts)
           for (int k = 1; k <= 3; ++k) {
             const int n = host.order();
             Graph b = bloom(host, k);
             auto p = profile(b);
             bool ok = p.c_ec == 2 && p.c_w == 2;
             for (int v = 0; v < n && ok; ++v)
               for (int j = 0; j < k && ok; ++j)
                 if (p.tr[n + v * k + j] !=
                     p.tr[v] + static_cast<std::uint32_t>(n * (k + 1) - 2))
                   ok = false;
             c.require(ok, "host=" + g6(host) + " k=" + std::to_string(k));
           }
       }});

  checks.push_back(
      {"lex-path-product", "C_W(P_n o H) = C_ec(P_n o H) = ceil(n/2) for regular H, n >= 4",
       [](Checker& c) {
         std::vector<Graph> hs;
         hs.push_back(complete_graph(1));
         hs.push_back(cycle_graph(3));
         hs.push_back(cycle_graph(4));
         hs.push_back(complete_graph(4));
         for (int n = 4; n <= 9; ++n)
           for (const auto& h : hs) {
             auto p = profile(lexicographic_product(path_graph(n), h));
             int want = (n + 1) / 2;
             c.require(p.c_w == want && p.c_ec == want,
                       "n=" + std::to_string(n) + " H=" + g6(h));
           }
       }});

  checks.push_back(
      {"cart-selfcentered-factor",
       "C_ec(G x H) = C_W(G x H) = C_W(G) when C_W(G) = C_ec(G) and H is self-centered "
       "transmission regular",
       [](Checker& c) {
         std::vector<Graph> gs;
         gs.push_back(star_graph(4));
         gs.push_back(path_graph(5));
         {
           std::vector<int> degs{2, 2};
           gs.push_back(center_regular_tree(degs, false));
         }
         std::vector<Graph> hs;
         hs.push_back(cycle_graph(5));
         hs.push_back(cycle_graph(6));
         hs.push_back(complete_graph(4));
         hs.push_back(hypercube(3));
         for (const auto& h : hs) {
           auto ph = profile(h);
           c.require(ph.c_w == 1 && ph.c_ec == 1, "H=" + g6(h) + " is not a valid host");
         }
         for (const auto& g : gs) {
           auto pg = profile(g);
           c.require(pg.c_w == pg.c_ec, "G=" + g6(g) + " complexities differ");
           for (const auto& h : hs) {
             auto pp = profile(cartesian_product(g, h));
             c.require(pp.c_w == pg.c_w && pp.c_ec == pg.c_w,
                       pair_witness(g, h,
                                    "C_W=" + std::to_string(pp.c_w) + " C_ec=" +
                                        std::to_string(pp.c_ec)));
           }
         }
       }});

  checks.push_back(
      {"center-regular-tree-equality",
       "center-regular trees satisfy C_W = C_ec = rad(T) + 1 relative to the branching depth",
       [](Checker& c) {
         std::vector<std::vector<int>> specs = {{3}, {2, 2}, {3, 2}, {2, 3},
                                                {4, 1}, {2, 2, 2}, {3, 1, 2}};
         for (const auto& degs : specs)
           for (bool bicentral : {false, true}) {
             Graph t = center_regular_tree(degs, bicentral);
             auto p = profile(t);
             auto rep = classify(t, p);
             int want = static_cast<int>(degs.size()) + 1;
             c.require(rep.center_regular_tree && p.c_w == want && p.c_ec == want,
                       "degrees=" + std::to_string(degs.size()) +
                           (bicentral ? " bicentral" : " unicentral") + " " + g6(t));
           }
       }});

  checks.push_back(
      {"ud-amalgam",
       "gluing a center-regular tree onto both vertices of an equal-transmission UD pair "
       "preserves C_ec > C_W",
       [](Checker& c) {
         // Hosts must genuinely satisfy the hypotheses, so only Z_1 and Z_2
         // qualify (their pendant pair is UD; larger k loses that).
         struct Combo {
           int z_k;
           Graph t;
         };
         std::vector<Combo> combos;
         combos.push_back({1, star_graph(2)});
         combos.push_back({2, star_graph(3)});
         {
           std::vector<int> degs{2, 2};
           combos.push_back({2, center_regular_tree(degs, false)});
         }
         combos.push_back({2, star_graph(4)});
         {
           std::vector<int> degs{3, 2};
           combos.push_back({1, center_regular_tree(degs, false)});
         }
         for (const auto& [zk, t] : combos) {
           Graph g0 = z_graph(zk);
           auto p0 = profile(g0);
           const int u = 2 * zk + 2, v = 2 * zk + 3;
           auto pairs = ud_pairs(g0);
           c.require(p0.c_ec > p0.c_w &&
                         std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) !=
                             pairs.end() &&
                         p0.tr[u] == p0.tr[v],
                     "z_graph(" + std::to_string(zk) + ") hypothesis");
           auto pt = profile(t);
           int root = 0;  // builders put the tree center at index 0
           c.require(pt.center.size() == 1 && pt.center[0] == root,
                     "tree center is not vertex 0");
           Graph g = identify(identify(g0, u, t, root), v, t, root);
           auto p = profile(g);
           c.require(p.c_ec > p.c_w,
                     "Z_" + std::to_string(zk) + " amalgam: C_ec=" + std::to_string(p.c_ec) +
                         " C_W=" + std::to_string(p.c_w));
           c.require(p.c_ec == p0.c_ec + pt.rad,
                     "Z_" + std::to_string(zk) + " amalgam: C_ec=" + std::to_string(p.c_ec));
         }
       }});

  checks.push_back(
      {"y-family", "Y_k has order 2k+4 and C_ec > C_W; Y_1 is Z_1",
       [](Checker& c) {
         for (int k = 1; k <= 6; ++k) {
           Graph y = y_graph(k);
           auto p = profile(y);
           c.require(y.order() == 2 * k + 4 && p.c_ec > p.c_w,
                     "k=" + std::to_string(k) + " C_ec=" + std::to_string(p.c_ec) +
                         " C_W=" + std::to_string(p.c_w));
         }
         c.require(canonical_form(y_graph(1)) == canonical_form(z_graph(1)),
                   "Y_1 and Z_1 are not isomorphic");
         auto p1 = profile(y_graph(1));
         c.require(p1.tr_set == std::vector<std::uint32_t>{8, 12}, "Tr(Y_1) is off");
       }});

  checks.push_back(
      {"yz-product-table",
       "C_ec(Y_k x Z_k) - C_W(Y_k x Z_k) = 1, 0, 0, -2 for k = 2, 3, 4, 5",
       [](Checker& c) {
         const int want[] = {1, 0, 0, -2};
         for (int k = 2; k <= 5; ++k) {
           auto p = profile(cartesian_product(y_graph(k), z_graph(k)));
           c.require(p.c_ec - p.c_w == want[k - 2],
                     "k=" + std::to_string(k) + " diff=" + std::to_string(p.c_ec - p.c_w));
         }
       }});

  checks.push_back(
      {"cycle-transmission", "every vertex of C_n has transmission floor(n^2/4)",
       [](Checker& c) {
         for (int n = 3; n <= 30; ++n) {
           auto p = profile(cycle_graph(n));
           c.require(p.c_w == 1 && p.tr_set[0] == static_cast<std::uint32_t>(n) * n / 4 &&
                         p.c_ec == 1,
                     "n=" + std::to_string(n));
         }
       }});

  checks.push_back(
      {"path-complexities",
       "P_n: Tr(v_i) = C(i,2) + C(n-i+1,2), ec(v_i) = max(i-1, n-i), both complexities "
       "ceil(n/2)",
       [](Checker& c) {
         for (int n = 2; n <= 20; ++n) {
           auto p = profile(path_graph(n));
           bool ok = p.c_w == (n + 1) / 2 && p.c_ec == (n + 1) / 2;
           for (int i = 1; i <= n && ok; ++i) {
             if (p.tr[i - 1] != static_cast<std::uint32_t>(binom2(i) + binom2(n - i + 1)))
               ok = false;
             if (p.ec[i - 1] != std::max(i - 1, n - i)) ok = false;
           }
           c.require(ok, "n=" + std::to_string(n));
         }
       }});

  checks.push_back(
      {"tree7-strict-inequality",
       "the 7-vertex branched tree has C_W = 7 > C_ec = 3 (diam 5, rad 3)",
       [](Checker& c) {
         auto p = profile(corpus::branched_tree7());
         c.require(p.c_w == 7 && p.diam == 5 && p.rad == 3 && p.c_ec == 3,
                   "C_W=" + std::to_string(p.c_w) + " C_ec=" + std::to_string(p.c_ec));
       }});

  return run_checks("families", opts.seed, std::move(checks), opts.workers);
}

std::vector<std::string> suite_names() {
  return {"product-identity", "product-equality", "trees", "diam2", "families"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "product-identity") return product_identity_suite(opts);
  if (name == "product-equality") return product_equality_suite(opts);
  if (name == "trees") return tree_suite(opts);
  if (name == "diam2") return diam2_suite(opts);
  if (name == "families") return family_suite(opts);
  fail(ErrorKind::UnknownTask, "unknown suite '" + name + "'");
}

}  // namespace gcx
