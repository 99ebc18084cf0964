#include "gcx/codec.hpp"

#include <algorithm>
#include <cstdint>

namespace gcx {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

void check_byte(unsigned char c, size_t pos) {
  if (c < 63 || c > 126)
    fail(ErrorKind::InvalidByte,
         "byte " + std::to_string(int(c)) + " at position " + std::to_string(pos) +
             " outside printable range 63..126");
}

// Parses the order field; advances pos. 1, 4 or 8 bytes per the format.
long long parse_order(std::string_view s, size_t& pos) {
  if (pos >= s.size()) fail(ErrorKind::TruncatedRecord, "missing size field");
  check_byte(s[pos], pos);
  unsigned char c = s[pos];
  if (c != 126) {
    ++pos;
    return c - kBias;
  }
  if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 126) {
    if (pos + 8 > s.size()) fail(ErrorKind::TruncatedRecord, "8-byte size field cut short");
    long long n = 0;
    for (size_t i = pos + 2; i < pos + 8; ++i) {
      check_byte(s[i], i);
      n = (n << 6) | (static_cast<unsigned char>(s[i]) - kBias);
    }
    pos += 8;
    return n;
  }
  if (pos + 4 > s.size()) fail(ErrorKind::TruncatedRecord, "4-byte size field cut short");
  long long n = 0;
  for (size_t i = pos + 1; i < pos + 4; ++i) {
    check_byte(s[i], i);
    n = (n << 6) | (static_cast<unsigned char>(s[i]) - kBias);
  }
  pos += 4;
  return n;
}

void append_order(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

std::string_view strip_header(std::string_view line) {
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header)
    return line.substr(kGraph6Header.size());
  if (line.substr(0, kSparse6Header.size()) == kSparse6Header)
    return line.substr(kSparse6Header.size());
  return line;
}

std::string_view strip_eol(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  return line;
}

}  // namespace

Graph decode_graph6(std::string_view raw, const DecodeOptions& opts) {
  std::string_view line = strip_header(strip_eol(raw));
  if (line.empty()) fail(ErrorKind::TruncatedRecord, "empty record");
  size_t pos = 0;
  long long n64 = parse_order(line, pos);
  if (n64 > kMaxOrder) fail(ErrorKind::TooLarge, "order " + std::to_string(n64));
  const int n = static_cast<int>(n64);
  const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  const size_t body = static_cast<size_t>((nbits + 5) / 6);
  if (line.size() - pos != body)
    fail(ErrorKind::TruncatedRecord,
         "body has " + std::to_string(line.size() - pos) + " bytes, expected " +
             std::to_string(body));

  Graph::Builder b(n);
  long long bit = 0;
  int row = 0, col = 1;
  for (size_t i = pos; i < line.size(); ++i) {
    check_byte(line[i], i);
    unsigned v = static_cast<unsigned char>(line[i]) - kBias;
    for (int k = 5; k >= 0; --k, ++bit) {
      bool set = (v >> k) & 1;
      if (bit >= nbits) {
        if (set && opts.strict_padding)
          fail(ErrorKind::InvalidPadding, "nonzero padding bit past the triangle");
        continue;
      }
      if (set) b.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return std::move(b).build();
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_order(out, n);
  unsigned acc = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph decode_sparse6(std::string_view raw, const DecodeOptions& opts) {
  std::string_view line = strip_header(strip_eol(raw));
  if (line.empty() || line[0] != ':')
    fail(ErrorKind::InvalidByte, "sparse6 record must start with ':'");
  line.remove_prefix(1);
  size_t pos = 0;
  long long n64 = parse_order(line, pos);
  if (n64 > kMaxOrder) fail(ErrorKind::TooLarge, "order " + std::to_string(n64));
  const int n = static_cast<int>(n64);

  int k = 1;
  while ((1 << k) < n && k < 30) ++k;  // bits needed for values 0..n-1

  // Bit reader over the remaining bytes.
  const size_t nbytes = line.size() - pos;
  const long long total_bits = static_cast<long long>(nbytes) * 6;
  auto get_bit = [&](long long i) -> int {
    unsigned char c = line[pos + static_cast<size_t>(i / 6)];
    check_byte(c, pos + static_cast<size_t>(i / 6));
    return (static_cast<unsigned>(c - kBias) >> (5 - (i % 6))) & 1;
  };

  Graph::Builder b(n);
  long long cursor = 0;
  long long v = 0;
  while (cursor + 1 + k <= total_bits) {
    int bflag = get_bit(cursor++);
    long long x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | get_bit(cursor++);
    if (bflag) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
      if (v >= n) break;
    } else if (x == v) {
      // All-ones padding can look like one final loop item when n is a
      // power of 2; a loop anywhere else is not a simple graph.
      if (cursor + 1 + k > total_bits) break;
      fail(ErrorKind::InvalidByte, "sparse6 loop not representable as a simple graph");
    } else {
      b.add_edge(static_cast<int>(x), static_cast<int>(v));
    }
  }
  (void)opts;
  return std::move(b).build();
}

Graph decode_line(std::string_view raw, const DecodeOptions& opts) {
  std::string_view line = strip_header(strip_eol(raw));
  if (!line.empty() && line[0] == ':') return decode_sparse6(line, opts);
  return decode_graph6(line, opts);
}

GraphStreamReader::GraphStreamReader(std::istream& in, OnError policy, DecodeOptions opts)
    : in_(in), policy_(policy), opts_(opts) {}

bool GraphStreamReader::next(Graph& out) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    std::string_view sv = strip_eol(line);
    if (sv.empty()) continue;
    if (sv == kGraph6Header || sv == kSparse6Header) continue;
    try {
      out = decode_line(sv, opts_);
      return true;
    } catch (const Error& e) {
      std::string diag = "line " + std::to_string(line_no_) + ": " + e.what();
      if (policy_ == OnError::abort) throw Error(e.kind(), diag);
      diagnostics_.push_back(diag);
    }
  }
  return false;
}

}  // namespace gcx
