#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "gcx/codec.hpp"
#include "gcx/construct.hpp"
#include "gcx/enumerate.hpp"

using namespace gcx;

TEST_CASE("hand-encoded graph6 records") {
  Graph k1 = decode_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);
  CHECK(encode_graph6(k1) == "@");

  Graph k2 = decode_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.has_edge(0, 1));
  CHECK(encode_graph6(k2) == "A_");

  Graph e2 = decode_graph6("A?");
  CHECK(e2.order() == 2);
  CHECK(e2.edge_count() == 0);

  CHECK(encode_graph6(complete_graph(1)) == "@");
}

TEST_CASE("round-trip over the exhaustive small corpus") {
  for (int n = 1; n <= 7; ++n) {
    GeneratorConfig cfg;
    cfg.n = n;
    ConnectedGraphGenerator gen(cfg);
    Graph g;
    while (gen.next(g)) {
      Graph back = decode_graph6(encode_graph6(g));
      CHECK(back == g);
    }
  }
}

TEST_CASE("round-trip on random graphs, including multiword rows") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    int n = std::uniform_int_distribution<int>(0, 50)(rng);
    Graph::Builder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) b.add_edge(u, v);
    Graph g = std::move(b).build();
    std::string line = encode_graph6(g);
    // body length: ceil(n(n-1)/2 / 6) bytes after the size field
    size_t size_field = n <= 62 ? 1 : 4;
    CHECK(line.size() == size_field + (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6);
    CHECK(decode_graph6(line) == g);
  }
}

TEST_CASE("multi-byte size fields") {
  Graph g63 = path_graph(63);
  std::string line = encode_graph6(g63);
  CHECK(line[0] == 126);
  CHECK(decode_graph6(line) == g63);

  Graph g200 = cycle_graph(200);
  CHECK(decode_graph6(encode_graph6(g200)) == g200);
}

TEST_CASE("decode errors") {
  CHECK_THROWS_AS(decode_graph6(""), Error);
  // truncated body
  try {
    decode_graph6("D");  // n=5 needs 2 body bytes
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TruncatedRecord);
  }
  // byte outside printable range
  try {
    decode_graph6(std::string("B") + char(30));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidByte);
  }
  // nonzero padding: K2's body byte with a stray low bit
  try {
    decode_graph6("A`");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPadding);
  }
  DecodeOptions lenient;
  lenient.strict_padding = false;
  Graph g = decode_graph6("A`", lenient);
  CHECK(g.order() == 2);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("optional header is tolerated") {
  Graph g = decode_graph6(">>graph6<<A_");
  CHECK(g.order() == 2);
  std::istringstream in(">>graph6<<\n@\nA_\n");
  GraphStreamReader reader(in);
  Graph out;
  int count = 0;
  while (reader.next(out)) ++count;
  CHECK(count == 2);
}

TEST_CASE("stream reading with abort and skip policies") {
  std::string data = "@\n=====\nA_\n";
  {
    std::istringstream in(data);
    GraphStreamReader reader(in, GraphStreamReader::OnError::skip);
    Graph g;
    int count = 0;
    while (reader.next(g)) ++count;
    CHECK(count == 2);
    REQUIRE(reader.diagnostics().size() == 1);
    CHECK(reader.diagnostics()[0].find("line 2") != std::string::npos);
  }
  {
    std::istringstream in(data);
    GraphStreamReader reader(in, GraphStreamReader::OnError::abort);
    Graph g;
    CHECK(reader.next(g));  // line 1 fine
    try {
      reader.next(g);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  {
    std::istringstream in("");
    GraphStreamReader reader(in);
    Graph g;
    CHECK_FALSE(reader.next(g));
  }
}

TEST_CASE("stream preserves file order") {
  std::string file = encode_graph6(complete_graph(1)) + "\n" + encode_graph6(complete_graph(2)) +
                     "\n" + encode_graph6(complete_graph(3)) + "\n";
  std::istringstream in(file);
  GraphStreamReader reader(in);
  Graph g;
  std::vector<int> orders;
  while (reader.next(g)) orders.push_back(g.order());
  CHECK(orders == std::vector<int>{1, 2, 3});
}

TEST_CASE("sparse6 decoding") {
  // ':Bd' encodes P3: items (1,00) edge(0,1), (1,01) edge(1,2)
  Graph p3 = decode_sparse6(":Bd");
  CHECK(p3.order() == 3);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));
  CHECK_FALSE(p3.has_edge(0, 2));

  Graph k1 = decode_sparse6(":@");
  CHECK(k1.order() == 1);

  // decode_line dispatches on the ':' prefix
  CHECK(decode_line(":Bd") == p3);
  CHECK(decode_line("A_") == complete_graph(2));

  CHECK_THROWS_AS(decode_sparse6("Bd"), Error);
}

TEST_CASE("encode is injective on equal-order labeled graphs") {
  GeneratorConfig cfg;
  cfg.n = 6;
  ConnectedGraphGenerator gen(cfg);
  Graph g;
  std::set<std::string> lines;
  std::uint64_t count = 0;
  while (gen.next(g)) {
    lines.insert(encode_graph6(g));
    ++count;
  }
  CHECK(lines.size() == count);
}
