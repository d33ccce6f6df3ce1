#include "turan/patterns.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace turan {

namespace {

Graph build_path_power(int k, int p) {
  if (k < 1) throw PatternError("P_k^p requires k >= 1");
  if (p < 1) throw PatternError("P_k^p requires p >= 1");
  if (k > kMaxN) throw PatternError("P_k^p requires k <= 64");
  Graph g = Graph::empty(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k && j - i <= p; ++j) g.add_edge(i, j);
  return g;
}

// Layers 1..k+1; layer L holds L vertices labeled after all earlier layers.
// Edges: intra-layer paths, and x_r^{L-1} -> x_r^L, x_{r+1}^L.
Graph build_tp(int k) {
  if (k < 1) throw PatternError("TP_k requires k >= 1");
  int n = (k + 1) * (k + 2) / 2;
  if (n > kMaxN) throw PatternError("TP_k exceeds 64 vertices");
  auto at = [](int layer, int r) { return layer * (layer - 1) / 2 + r; };  // layer >= 1, r in 0..layer-1
  Graph g = Graph::empty(n);
  for (int layer = 2; layer <= k + 1; ++layer) {
    for (int r = 0; r + 1 < layer; ++r) g.add_edge(at(layer, r), at(layer, r + 1));
    for (int r = 0; r < layer - 1; ++r) {
      g.add_edge(at(layer - 1, r), at(layer, r));
      g.add_edge(at(layer - 1, r), at(layer, r + 1));
    }
  }
  return g;
}

Graph build_complete(int s) {
  if (s < 1 || s > kMaxN) throw PatternError("K_s requires 1 <= s <= 64");
  Graph g = Graph::empty(s);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) g.add_edge(i, j);
  return g;
}

Graph build_k5_minus() {
  Graph g = build_complete(5);
  g.remove_edge(3, 4);
  return g;
}

Graph build_turan(int n, int r) {
  if (n < 0 || n > kMaxN) throw PatternError("T(n,r) requires 0 <= n <= 64");
  if (r < 1) throw PatternError("T(n,r) requires r >= 1");
  Graph g = Graph::empty(n);
  std::vector<int> part(n);
  int q = n / r, rem = n % r, v = 0;
  for (int c = 0; c < r && v < n; ++c) {
    int size = q + (c < rem ? 1 : 0);
    for (int t = 0; t < size; ++t) part[v++] = c;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part[i] != part[j]) g.add_edge(i, j);
  return g;
}

Graph build_star(int k) {
  if (k < 0 || k + 1 > kMaxN) throw PatternError("S_k requires 0 <= k <= 63");
  Graph g = Graph::empty(k + 1);
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

Graph build_hni(int n, int i) {
  if (n < 0 || n > kMaxN) throw PatternError("H(n,i) requires 0 <= n <= 64");
  if (i < 0 || i > n) throw PatternError("H(n,i) requires 0 <= i <= n");
  if (i % 3 != 0) throw PatternError("H(n,i) requires 3 | i");
  Graph g = Graph::empty(n);
  for (int x = 0; x < i; ++x)
    for (int y = i; y < n; ++y) g.add_edge(x, y);
  for (int t = 0; t + 2 < i; t += 3) {
    g.add_edge(t, t + 1);
    g.add_edge(t, t + 2);
    g.add_edge(t + 1, t + 2);
  }
  return g;
}

Graph build_fnij(int n, int i, int j) {
  if (n < 1 || n > kMaxN) throw PatternError("F(n,i,j) requires 1 <= n <= 64");
  if (!(1 <= j && j <= i && i <= n)) throw PatternError("F(n,i,j) requires 1 <= j <= i <= n");
  if (i % 3 == 0) throw PatternError("F(n,i,j) requires 3 does not divide i");
  if ((i - j) % 3 != 0) throw PatternError("F(n,i,j) requires 3 | (i-j)");
  Graph g = Graph::empty(n);
  for (int x = 0; x < i; ++x)
    for (int y = i; y < n; ++y) g.add_edge(x, y);
  for (int leaf = 1; leaf < j; ++leaf) g.add_edge(0, leaf);  // S_{j-1} on 0..j-1
  for (int t = j; t + 2 < i; t += 3) {
    g.add_edge(t, t + 1);
    g.add_edge(t, t + 2);
    g.add_edge(t + 1, t + 2);
  }
  return g;
}

Graph build_matched_bipartite(int n) {
  if (n < 0 || n > kMaxN) throw PatternError("MB(n) requires 0 <= n <= 64");
  if (n % 2 != 0) throw PatternError("MB(n) requires even n");
  int h = n / 2;
  Graph g = Graph::empty(n);
  for (int x = 0; x < h; ++x)
    for (int y = h; y < n; ++y) g.add_edge(x, y);
  for (int t = 0; t + 1 < h; t += 2) {
    g.add_edge(t, t + 1);
    g.add_edge(h + t, h + t + 1);
  }
  return g;
}

}  // namespace

Graph build(const PatternId& p) {
  switch (p.kind) {
    case PatternKind::PathPower: return build_path_power(p.a, p.b);
    case PatternKind::TriangularPyramid: return build_tp(p.a);
    case PatternKind::Complete: return build_complete(p.a);
    case PatternKind::K5Minus: return build_k5_minus();
    case PatternKind::Turan: return build_turan(p.a, p.b);
    case PatternKind::Star: return build_star(p.a);
    case PatternKind::Hni: return build_hni(p.a, p.b);
    case PatternKind::Fnij: return build_fnij(p.a, p.b, p.c);
    case PatternKind::MatchedBipartite: return build_matched_bipartite(p.a);
  }
  throw PatternError("unknown pattern kind");
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  int number() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw PatternError("pattern syntax: expected a number in '" + std::string(s) + "'");
    int v = 0;
    std::from_chars(s.data() + start, s.data() + pos, v);
    return v;
  }
  void done() {
    if (pos != s.size()) throw PatternError("pattern syntax: trailing characters in '" + std::string(s) + "'");
  }
};

}  // namespace

PatternId parse_pattern(std::string_view raw) {
  std::string up;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up.empty()) throw PatternError("pattern syntax: empty string");
  Cursor c{up};

  if (up.size() >= 2 && up[0] == 'T' && up[1] == 'P') {
    c.pos = 2;
    int k = c.number();
    c.done();
    return PatternId::tp(k);
  }
  if (up.size() >= 2 && up[0] == 'M' && up[1] == 'B') {
    c.pos = 2;
    if (!c.eat('(')) throw PatternError("pattern syntax: expected MB(n)");
    int n = c.number();
    if (!c.eat(')')) throw PatternError("pattern syntax: expected MB(n)");
    c.done();
    return PatternId::matched_bipartite(n);
  }
  switch (up[0]) {
    case 'P': {
      c.pos = 1;
      int k = c.number();
      if (!c.eat('^')) throw PatternError("pattern syntax: expected P<k>^<p>");
      int p = c.number();
      c.done();
      return PatternId::path_power(k, p);
    }
    case 'K': {
      c.pos = 1;
      int s = c.number();
      if (c.pos < up.size() && up[c.pos] == '-') {
        ++c.pos;
        c.done();
        if (s != 5) throw PatternError("pattern syntax: only K5- is supported");
        return PatternId::k5_minus();
      }
      c.done();
      return PatternId::complete(s);
    }
    case 'S': {
      c.pos = 1;
      int k = c.number();
      c.done();
      return PatternId::star(k);
    }
    case 'T': {
      c.pos = 1;
      if (!c.eat('(')) throw PatternError("pattern syntax: expected T(n,r)");
      int n = c.number();
      if (!c.eat(',')) throw PatternError("pattern syntax: expected T(n,r)");
      int r = c.number();
      if (!c.eat(')')) throw PatternError("pattern syntax: expected T(n,r)");
      c.done();
      return PatternId::turan(n, r);
    }
    case 'H': {
      c.pos = 1;
      if (!c.eat('(')) throw PatternError("pattern syntax: expected H(n,i)");
      int n = c.number();
      if (!c.eat(',')) throw PatternError("pattern syntax: expected H(n,i)");
      int i = c.number();
      if (!c.eat(')')) throw PatternError("pattern syntax: expected H(n,i)");
      c.done();
      return PatternId::hni(n, i);
    }
    case 'F': {
      c.pos = 1;
      if (!c.eat('(')) throw PatternError("pattern syntax: expected F(n,i,j)");
      int n = c.number();
      if (!c.eat(',')) throw PatternError("pattern syntax: expected F(n,i,j)");
      int i = c.number();
      if (!c.eat(',')) throw PatternError("pattern syntax: expected F(n,i,j)");
      int j = c.number();
      if (!c.eat(')')) throw PatternError("pattern syntax: expected F(n,i,j)");
      c.done();
      return PatternId::fnij(n, i, j);
    }
    default: break;
  }
  throw PatternError("pattern syntax: unrecognized pattern '" + std::string(raw) + "'");
}

std::string to_string(const PatternId& p) {
  switch (p.kind) {
    case PatternKind::PathPower: return "P" + std::to_string(p.a) + "^" + std::to_string(p.b);
    case PatternKind::TriangularPyramid: return "TP" + std::to_string(p.a);
    case PatternKind::Complete: return "K" + std::to_string(p.a);
    case PatternKind::K5Minus: return "K5-";
    case PatternKind::Turan: return "T(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
    case PatternKind::Star: return "S" + std::to_string(p.a);
    case PatternKind::Hni: return "H(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
    case PatternKind::Fnij:
      return "F(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + ")";
    case PatternKind::MatchedBipartite: return "MB(" + std::to_string(p.a) + ")";
  }
  return "?";
}

namespace {

// Shared backtracking embedder. Pattern vertices are matched in descending
// degree order (ties by index); candidates are pruned with host-degree and
// mapped-neighbor bitsets. forced maps pattern vertices to required host
// vertices (-1 = unconstrained).
struct Embedder {
  const Graph& host;
  const Graph& pat;
  std::array<int, kMaxN> order{};        // position -> pattern vertex
  std::array<int, kMaxN> forced{};       // pattern vertex -> host vertex or -1
  std::array<std::uint64_t, kMaxN> deg_ok{};  // by pattern vertex: hosts with enough degree
  std::array<int, kMaxN> map{};          // pattern vertex -> host vertex
  std::uint64_t used = 0;

  Embedder(const Graph& h, const Graph& p) : host(h), pat(p) {
    forced.fill(-1);
    for (int v = 0; v < pat.n; ++v) order[v] = v;
    std::sort(order.begin(), order.begin() + pat.n, [&](int a, int b) {
      int da = pat.degree(a), db = pat.degree(b);
      return da != db ? da > db : a < b;
    });
    for (int v = 0; v < pat.n; ++v) {
      std::uint64_t ok = 0;
      int need = pat.degree(v);
      for (int u = 0; u < host.n; ++u)
        if (host.degree(u) >= need) ok |= std::uint64_t{1} << u;
      deg_ok[v] = ok;
    }
  }

  bool run(int d) {
    if (d == pat.n) return true;
    int v = order[d];
    std::uint64_t cand = deg_ok[v] & ~used;
    if (forced[v] >= 0) cand &= std::uint64_t{1} << forced[v];
    for (int e = 0; e < d && cand; ++e) {
      int w = order[e];
      if (pat.has_edge(v, w)) cand &= host.adj[map[w]];
    }
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      map[v] = u;
      used |= std::uint64_t{1} << u;
      if (run(d + 1)) return true;
      used &= ~(std::uint64_t{1} << u);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> contains(const Graph& host, const Graph& pattern) {
  if (pattern.n > host.n) return std::nullopt;
  if (pattern.n == 0) return std::vector<int>{};
  Embedder e(host, pattern);
  if (!e.run(0)) return std::nullopt;
  std::vector<int> out(pattern.n);
  for (int v = 0; v < pattern.n; ++v) out[v] = e.map[v];
  return out;
}

bool is_free(const Graph& host, const Graph& pattern) { return !contains(host, pattern).has_value(); }
bool is_free(const Graph& host, const PatternId& p) { return is_free(host, build(p)); }

bool contains_new_edge(const Graph& host, const Graph& pattern, int u, int v) {
  if (pattern.n > host.n) return false;
  if (u < 0 || v < 0 || u >= host.n || v >= host.n || !host.has_edge(u, v))
    throw std::invalid_argument("contains_new_edge: uv is not an edge of host");
  for (int a = 0; a < pattern.n; ++a) {
    std::uint64_t nb = pattern.adj[a] & bits_above(a);
    while (nb) {
      int b = std::countr_zero(nb);
      nb &= nb - 1;
      for (int flip = 0; flip < 2; ++flip) {
        Embedder e(host, pattern);
        e.forced[a] = flip ? v : u;
        e.forced[b] = flip ? u : v;
        if (e.run(0)) return true;
      }
    }
  }
  return false;
}

bool contains_using_vertex(const Graph& host, const Graph& pattern, int host_vertex) {
  if (pattern.n > host.n) return false;
  if (host_vertex < 0 || host_vertex >= host.n)
    throw std::invalid_argument("contains_using_vertex: vertex out of range");
  for (int a = 0; a < pattern.n; ++a) {
    Embedder e(host, pattern);
    e.forced[a] = host_vertex;
    if (e.run(0)) return true;
  }
  return false;
}

}  // namespace turan
