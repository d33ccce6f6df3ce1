#include "turan/graph6.hpp"

namespace turan {

std::string graph6_encode(const Graph& g) {
  std::string out;
  if (g.n <= 62) {
    out.push_back(static_cast<char>(g.n + 63));
  } else {
    // 63 <= n <= 64: '~' then three 6-bit bytes, big-endian.
    out.push_back(126);
    out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((g.n & 63) + 63));
  }
  int bits = 0, acc = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view s) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (pos + k > s.size()) throw Graph6Error("graph6: truncated input", s.size());
  };
  auto sixbits = [&]() {
    need(1);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw Graph6Error("graph6: byte out of range 63..126", pos);
    ++pos;
    return static_cast<int>(c - 63);
  };

  need(1);
  long long n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    ++pos;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
      throw Graph6Error("graph6: orders above 258047 not supported", pos);
    long long a = sixbits(), b = sixbits(), c = sixbits();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = sixbits();
  }
  if (n > kMaxN) throw Graph6Error("graph6: order exceeds 64", 0);

  Graph g = Graph::empty(static_cast<int>(n));
  int bits = 0, acc = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = sixbits();
        bits = 6;
      }
      --bits;
      if ((acc >> bits) & 1) g.add_edge(i, j);
    }
  }
  // Trailing padding must be zero and nothing may follow.
  if (bits && (acc & ((1 << bits) - 1)))
    throw Graph6Error("graph6: nonzero padding bits", pos - 1);
  if (pos != s.size()) throw Graph6Error("graph6: trailing bytes", pos);
  return g;
}

}  // namespace turan
