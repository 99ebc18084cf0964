#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

// graph6 / sparse6 interchange, bit-exact per the format description shipped
// with the usual graph-enumeration tooling: printable bytes 63..126, 6 data
// bits per byte, upper adjacency triangle in column-major order.

struct DecodeOptions {
  // Strict mode rejects nonzero padding bits past the triangle.
  bool strict_padding = true;
};

Graph decode_graph6(std::string_view line, const DecodeOptions& opts = {});
std::string encode_graph6(const Graph& g);

// Read-only sparse6 support (lines starting with ':').
Graph decode_sparse6(std::string_view line, const DecodeOptions& opts = {});

// Dispatches on the ':' prefix.
Graph decode_line(std::string_view line, const DecodeOptions& opts = {});

// Line-oriented reader over a stream of graph6/sparse6 records. An optional
// ">>graph6<<" / ">>sparse6<<" header is tolerated and skipped. In skip mode
// bad lines are recorded as diagnostics and reading continues; otherwise the
// decode error is rethrown with the 1-based line number attached.
class GraphStreamReader {
public:
  enum class OnError { abort, skip };

  explicit GraphStreamReader(std::istream& in, OnError policy = OnError::abort,
                             DecodeOptions opts = {});

  // Returns false at end of stream. The current record's 1-based line number
  // is available via line_number() after a successful next().
  bool next(Graph& out);

  size_t line_number() const { return line_no_; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
  std::istream& in_;
  OnError policy_;
  DecodeOptions opts_;
  size_t line_no_ = 0;
  std::vector<std::string> diagnostics_;
};

}  // namespace gcx
