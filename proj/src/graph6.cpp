#include "spexlab/graph6.hpp"

namespace spexlab {

namespace {

constexpr long kMaxOrder = 68719476735L;  // 2^36 - 1, graph6 limit

void append_size_prefix(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

long parse_size_prefix(std::string_view s, size_t& pos) {
  auto byte = [&](size_t i) -> long {
    if (i >= s.size()) throw Graph6Error("truncated graph6 size prefix", i);
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 byte in size prefix", i);
    return c - 63;
  };
  long b0 = byte(0);
  if (b0 < 63) {
    pos = 1;
    return b0;
  }
  long b1 = byte(1);
  if (b1 < 63) {
    long n = (b1 << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
    return n;
  }
  long n = 0;
  for (size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
  pos = 8;
  return n;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  long n = g.order();
  if (n > kMaxOrder) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  append_size_prefix(out, n);
  int bits = 0;
  int current = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      current = (current << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(current + 63));
        bits = 0;
        current = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((current << (6 - bits)) + 63));
  return out;
}

Graph decode_graph6(std::string_view record) {
  while (!record.empty() && (record.back() == '\n' || record.back() == '\r'))
    record.remove_suffix(1);
  if (record.empty()) throw Graph6Error("empty graph6 record", 0);
  size_t pos = 0;
  long n = parse_size_prefix(record, pos);
  if (n > 100000) throw Graph6Error("graph6 order too large for this decoder", 0);
  Graph g(static_cast<int>(n));
  long needed_bits = n * (n - 1) / 2;
  size_t needed_bytes = static_cast<size_t>((needed_bits + 5) / 6);
  if (record.size() - pos != needed_bytes)
    throw Graph6Error("graph6 record has wrong length", record.size());
  int u = 0, v = 1;
  for (size_t i = pos; i < record.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(record[i]);
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 byte", i);
    int word = c - 63;
    for (int bit = 5; bit >= 0; --bit) {
      if (v >= n) {
        if ((word >> bit) & 1) throw Graph6Error("nonzero padding bit", i);
        continue;
      }
      if ((word >> bit) & 1) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in, size_t* bad_records) {
  std::vector<Graph> out;
  size_t bad = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) continue;
    try {
      out.push_back(decode_graph6(line));
    } catch (const Graph6Error&) {
      ++bad;
    }
  }
  if (bad_records) *bad_records = bad;
  return out;
}

}  // namespace spexlab
