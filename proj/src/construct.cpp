#include "gcx/construct.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace gcx {

namespace {

void check_product_order(long long a, long long b) {
  if (a * b > kMaxOrder)
    fail(ErrorKind::TooLarge, "product order " + std::to_string(a * b));
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    fail(ErrorKind::BadParameter, "expected integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  if (ng == 0 || nh == 0) fail(ErrorKind::EmptyGraph, "product with the empty graph");
  check_product_order(ng, nh);
  Graph::Builder b(ng * nh);
  for (int x = 0; x < ng; ++x)
    g.for_each_neighbor(x, [&](int y) {
      if (x < y)
        for (int z = 0; z < nh; ++z) b.add_edge(x * nh + z, y * nh + z);
    });
  for (int z = 0; z < nh; ++z)
    h.for_each_neighbor(z, [&](int w) {
      if (z < w)
        for (int x = 0; x < ng; ++x) b.add_edge(x * nh + z, x * nh + w);
    });
  return std::move(b).build();
}

Graph cartesian_power(const Graph& g, int m) {
  if (m < 1) fail(ErrorKind::BadParameter, "power exponent must be >= 1");
  long long order = 1;
  for (int i = 0; i < m; ++i) {
    order *= g.order();
    if (order > kMaxOrder) fail(ErrorKind::TooLarge, "power order exceeds capacity");
  }
  Graph out = g;
  for (int i = 1; i < m; ++i) out = cartesian_product(out, g);
  return out;
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  if (ng == 0 || nh == 0) fail(ErrorKind::EmptyGraph, "product with the empty graph");
  check_product_order(ng, nh);
  Graph::Builder b(ng * nh);
  for (int x = 0; x < ng; ++x)
    g.for_each_neighbor(x, [&](int y) {
      if (x < y)
        for (int z = 0; z < nh; ++z)
          for (int w = 0; w < nh; ++w) b.add_edge(x * nh + z, y * nh + w);
    });
  for (int z = 0; z < nh; ++z)
    h.for_each_neighbor(z, [&](int w) {
      if (z < w)
        for (int x = 0; x < ng; ++x) b.add_edge(x * nh + z, x * nh + w);
    });
  return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  if (ng + nh > kMaxOrder) fail(ErrorKind::TooLarge, "join order exceeds capacity");
  Graph::Builder b(ng + nh);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) b.add_edge(u, ng + v);
  return std::move(b).build();
}

Graph bloom(const Graph& g, int k) {
  if (k < 1) fail(ErrorKind::BadParameter, "bloom needs k >= 1");
  const int n = g.order();
  const long long total = static_cast<long long>(n) * (k + 1);
  if (total > kMaxOrder) fail(ErrorKind::TooLarge, "bloom order exceeds capacity");
  Graph::Builder b(static_cast<int>(total));
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < k; ++j) b.add_edge(v, n + v * k + j);
  return std::move(b).build();
}

Graph hypercube(int d) {
  if (d < 1) fail(ErrorKind::BadParameter, "hypercube needs d >= 1");
  if (d > 12) fail(ErrorKind::TooLarge, "hypercube dimension " + std::to_string(d));
  const int n = 1 << d;
  Graph::Builder b(n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i)
      if (!(v & (1 << i))) b.add_edge(v, v | (1 << i));
  return std::move(b).build();
}

Graph hypercube_minus(int d) {
  if (d < 2) fail(ErrorKind::BadParameter, "punctured hypercube needs d >= 2");
  if (d > 12) fail(ErrorKind::TooLarge, "hypercube dimension " + std::to_string(d));
  const int n = (1 << d) - 1;
  Graph::Builder b(n);
  for (int v = 1; v <= n; ++v)
    for (int i = 0; i < d; ++i) {
      int u = v ^ (1 << i);
      if (u >= 1 && u < v) b.add_edge(u - 1, v - 1);
    }
  return std::move(b).build();
}

Graph z_graph(int k) {
  if (k < 1) fail(ErrorKind::BadParameter, "z graph needs k >= 1");
  const int cyc = 2 * k + 2;
  if (cyc + 2 > kMaxOrder) fail(ErrorKind::TooLarge, "z graph order exceeds capacity");
  Graph::Builder b(cyc + 2);
  for (int v = 0; v < cyc; ++v) b.add_edge(v, (v + 1) % cyc);
  b.add_edge(0, cyc);          // pendant u'
  b.add_edge(k + 1, cyc + 1);  // pendant v'
  return std::move(b).build();
}

Graph y_graph(int k) {
  if (k < 1) fail(ErrorKind::BadParameter, "y graph needs k >= 1");
  const int path = 2 * k + 3;
  if (path + 1 > kMaxOrder) fail(ErrorKind::TooLarge, "y graph order exceeds capacity");
  Graph::Builder b(path + 1);
  for (int v = 0; v + 1 < path; ++v) b.add_edge(v, v + 1);
  b.add_edge(path, k);
  b.add_edge(path, k + 2);
  return std::move(b).build();
}

Graph center_regular_tree(std::span<const int> level_degrees, bool bicentral) {
  if (level_degrees.empty()) fail(ErrorKind::BadParameter, "no level degrees given");
  for (int d : level_degrees)
    if (d < 1) fail(ErrorKind::BadParameter, "level degrees must be >= 1");

  long long order = bicentral ? 2 : 1;
  long long layer = order;
  for (int d : level_degrees) {
    layer *= d;
    order += layer;
    if (order > kMaxOrder) fail(ErrorKind::TooLarge, "tree order exceeds capacity");
  }

  Graph::Builder b(static_cast<int>(order));
  std::vector<int> frontier;
  int next_id = 0;
  if (bicentral) {
    frontier = {0, 1};
    next_id = 2;
    b.add_edge(0, 1);
  } else {
    frontier = {0};
    next_id = 1;
  }
  for (int d : level_degrees) {
    std::vector<int> next;
    for (int v : frontier)
      for (int j = 0; j < d; ++j) {
        b.add_edge(v, next_id);
        next.push_back(next_id++);
      }
    frontier = std::move(next);
  }
  return std::move(b).build();
}

Graph identify(const Graph& a, int va, const Graph& b, int vb) {
  const int na = a.order(), nb = b.order();
  if (va < 0 || va >= na || vb < 0 || vb >= nb)
    fail(ErrorKind::VertexOutOfRange, "identification vertex out of range");
  if (na + nb - 1 > kMaxOrder) fail(ErrorKind::TooLarge, "identified order exceeds capacity");
  auto map_b = [&](int w) { return w == vb ? va : na + (w < vb ? w : w - 1); };
  Graph::Builder out(na + nb - 1);
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(map_b(u), map_b(v));
  return std::move(out).build();
}

Graph path_graph(int n) {
  if (n < 1) fail(ErrorKind::BadParameter, "path needs n >= 1");
  Graph::Builder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) fail(ErrorKind::BadParameter, "cycle needs n >= 3");
  Graph::Builder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph complete_graph(int n) {
  if (n < 1) fail(ErrorKind::BadParameter, "complete graph needs n >= 1");
  Graph::Builder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph star_graph(int leaves) {
  if (leaves < 1) fail(ErrorKind::BadParameter, "star needs >= 1 leaf");
  Graph::Builder b(leaves + 1);
  for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph paw_graph() {
  return build_graph(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {0, 3}}, "paw");
}

Graph complete_minus_edges(int n, int k) {
  if (k < 0 || k > n / 2)
    fail(ErrorKind::BadParameter, "edge removal count must be in 0..floor(n/2)");
  std::vector<std::pair<int, int>> removed;
  for (int i = 0; i < k; ++i) removed.emplace_back(2 * i, 2 * i + 1);
  return complete_minus_edges(n, removed);
}

Graph complete_minus_edges(int n, std::span<const std::pair<int, int>> removed) {
  if (n < 2) fail(ErrorKind::BadParameter, "needs n >= 2");
  Graph::Builder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  for (auto [u, v] : removed) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      fail(ErrorKind::InvalidEdge, "removal edge out of range");
    b.remove_edge(u, v);
  }
  return std::move(b).build();
}

Graph standard_family(const FamilySpec& spec) {
  const std::string& s = spec.text;
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t p = s.find(':', start);
    if (p == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, p - start));
    start = p + 1;
  }
  if (parts.empty() || parts[0].empty()) fail(ErrorKind::BadParameter, "empty family spec");
  const std::string& fam = parts[0];
  auto arity = [&](size_t want) {
    if (parts.size() != want + 1)
      fail(ErrorKind::BadParameter, "family '" + fam + "' wants " + std::to_string(want) +
                                        " parameter(s) in '" + s + "'");
  };

  if (fam == "path") { arity(1); return path_graph(parse_int(parts[1])); }
  if (fam == "cycle") { arity(1); return cycle_graph(parse_int(parts[1])); }
  if (fam == "complete") { arity(1); return complete_graph(parse_int(parts[1])); }
  if (fam == "star") { arity(1); return star_graph(parse_int(parts[1])); }
  if (fam == "hypercube") { arity(1); return hypercube(parse_int(parts[1])); }
  if (fam == "qminus") { arity(1); return hypercube_minus(parse_int(parts[1])); }
  if (fam == "paw") { arity(0); return paw_graph(); }
  if (fam == "z") { arity(1); return z_graph(parse_int(parts[1])); }
  if (fam == "y") { arity(1); return y_graph(parse_int(parts[1])); }
  if (fam == "kminus") { arity(2); return complete_minus_edges(parse_int(parts[1]), parse_int(parts[2])); }
  if (fam == "bloom") {
    // bloom:<family spec>:<k> -- the host spec is everything in between.
    if (parts.size() < 3) fail(ErrorKind::BadParameter, "bloom wants bloom:<family>:<k>");
    std::string host = parts[1];
    for (size_t i = 2; i + 1 < parts.size(); ++i) host += ":" + parts[i];
    return bloom(standard_family(FamilySpec::parse(host)), parse_int(parts.back()));
  }
  if (fam == "crt") {
    // crt:d0,d1,...[:bi]
    if (parts.size() != 2 && parts.size() != 3)
      fail(ErrorKind::BadParameter, "center-regular tree wants crt:d0,d1,...[:bi]");
    bool bicentral = false;
    if (parts.size() == 3) {
      if (parts[2] != "bi") fail(ErrorKind::BadParameter, "unknown tree variant '" + parts[2] + "'");
      bicentral = true;
    }
    std::vector<int> degrees;
    std::string list = parts[1];
    size_t q = 0;
    while (q <= list.size()) {
      size_t c = list.find(',', q);
      if (c == std::string::npos) c = list.size();
      degrees.push_back(parse_int(std::string_view(list).substr(q, c - q)));
      q = c + 1;
    }
    return center_regular_tree(degrees, bicentral);
  }
  fail(ErrorKind::BadParameter, "unknown family '" + fam + "'");
}

}  // namespace gcx
