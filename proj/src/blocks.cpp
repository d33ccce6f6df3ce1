#include "turan/blocks.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "turan/formulas.hpp"
#include "turan/patterns.hpp"

namespace turan {

std::string to_string(BlockKindTag tag) {
  switch (tag) {
    case BlockKindTag::K5Minus: return "K5-";
    case BlockKindTag::K4: return "K4";
    case BlockKindTag::Pyramid: return "pyramid";
    case BlockKindTag::Suspension: return "suspension";
  }
  return "?";
}

Graph normalize(const Graph& g) {
  Graph out = Graph::empty(g.n);
  for (auto [u, v] : g.edges())
    if (triangles_on_edge(g, u, v) > 0) out.add_edge(u, v);
  return out;
}

namespace {

struct TriUF {
  std::vector<int> p;
  explicit TriUF(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int a) {
    while (p[a] != a) {
      p[a] = p[p[a]];
      a = p[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      p[b] = a;
    else
      p[a] = b;
  }
};

int edge_key(int u, int v) { return u < v ? u * kMaxN + v : v * kMaxN + u; }

Block make_block(const std::vector<Triangle>& tris) {
  Block b;
  b.triangles = tris;
  std::set<int> vs;
  std::set<Edge> es;
  for (const Triangle& t : tris) {
    vs.insert({t.a, t.b, t.c});
    es.insert({{t.a, t.b}, {t.a, t.c}, {t.b, t.c}});
  }
  b.vertices.assign(vs.begin(), vs.end());
  b.edges.assign(es.begin(), es.end());
  return b;
}

}  // namespace

BlockDecomposition decompose(const Graph& g) {
  BlockDecomposition d;
  std::vector<Triangle> tris = triangle_list(g);
  TriUF uf(static_cast<int>(tris.size()));
  std::map<int, int> first_tri_on_edge;
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
    const Triangle& t = tris[i];
    for (auto [u, v] : {std::pair{t.a, t.b}, std::pair{t.a, t.c}, std::pair{t.b, t.c}}) {
      auto [it, fresh] = first_tri_on_edge.try_emplace(edge_key(u, v), i);
      if (!fresh) uf.unite(i, it->second);
    }
  }
  std::map<int, std::vector<Triangle>> groups;  // root (== smallest triangle index) -> members
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) groups[uf.find(i)].push_back(tris[i]);
  for (auto& [root, members] : groups) d.blocks.push_back(make_block(members));
  for (auto [u, v] : g.edges())
    if (triangles_on_edge(g, u, v) == 0) d.unassigned_edges.push_back({u, v});
  return d;
}

namespace {

bool independent_in(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) return false;
  return true;
}

std::vector<int> minus(const std::vector<int>& all, std::uint64_t drop_mask) {
  std::vector<int> out;
  for (int v : all)
    if (!(drop_mask >> v & 1)) out.push_back(v);
  return out;
}

std::string block_summary(const Block& b) {
  std::ostringstream os;
  os << "{|V|=" << b.vertices.size() << ", |E|=" << b.edges.size() << ", t=" << b.triangles.size()
     << ", V=[";
  for (std::size_t i = 0; i < b.vertices.size(); ++i) os << (i ? "," : "") << b.vertices[i];
  os << "]}";
  return os.str();
}

}  // namespace

BlockKind classify(const Graph& g, const Block& b) {
  // Work on the block's own edge set; host adjacency backs the witness checks.
  Graph bg = Graph::empty(g.n);
  for (auto [u, v] : b.edges) bg.add_edge(u, v);

  const Graph k5m = build(PatternId::k5_minus());
  const Graph k4 = build(PatternId::complete(4));
  const Graph tp2 = build(PatternId::tp(2));

  if (contains(bg, k5m)) {
    // K5Minus witness: a core triangle; every other block vertex is adjacent
    // to 2 or 3 of its vertices, and those others are pairwise non-adjacent.
    for (const Triangle& t : b.triangles) {
      std::uint64_t core_mask = (std::uint64_t{1} << t.a) | (std::uint64_t{1} << t.b) | (std::uint64_t{1} << t.c);
      std::vector<int> rest = minus(b.vertices, core_mask);
      if (!independent_in(g, rest)) continue;
      bool ok = true;
      for (int w : rest) {
        int c = std::popcount(g.adj[w] & core_mask);
        if (c < 2 || c > 3) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      BlockKind kind;
      kind.tag = BlockKindTag::K5Minus;
      kind.core = {t.a, t.b, t.c};
      kind.red_edges = {{t.a, t.b}, {t.a, t.c}, {t.b, t.c}};
      return kind;
    }
    throw ClaimViolation("block contains K5- but no core triangle satisfies the K5- witness: " +
                         block_summary(b));
  }

  if (contains(bg, k4)) {
    if (b.vertices.size() == 4) {
      if (b.edges.size() != 6)
        throw ClaimViolation("4-vertex block with a K4 is not a bare K4: " + block_summary(b));
      BlockKind kind;
      kind.tag = BlockKindTag::K4;
      kind.core = {-1, -1, -1};
      kind.red_edges = {{b.vertices[0], b.vertices[1]}, {b.vertices[2], b.vertices[3]}};
      return kind;
    }
    // K4 witness: a K4 together with three designated red edges (the
    // edge set of one of its triangles, or a star at one of its vertices)
    // such that the remaining block vertices are pairwise non-adjacent and
    // each is adjacent to both ends of a designated edge.
    std::vector<std::array<int, 4>> k4s;
    for (std::size_t i = 0; i < b.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < b.vertices.size(); ++j)
        for (std::size_t k = j + 1; k < b.vertices.size(); ++k)
          for (std::size_t l = k + 1; l < b.vertices.size(); ++l) {
            int a = b.vertices[i], c = b.vertices[j], d = b.vertices[k], e = b.vertices[l];
            if (bg.has_edge(a, c) && bg.has_edge(a, d) && bg.has_edge(a, e) && bg.has_edge(c, d) &&
                bg.has_edge(c, e) && bg.has_edge(d, e))
              k4s.push_back({a, c, d, e});
          }
    for (const auto& q : k4s) {
      std::uint64_t qmask = 0;
      for (int v : q) qmask |= std::uint64_t{1} << v;
      std::vector<int> rest = minus(b.vertices, qmask);
      if (!independent_in(g, rest)) continue;
      std::vector<std::vector<Edge>> designations;
      for (int skip = 3; skip >= 0; --skip) {  // triangle designs: drop q[skip], ascending triple
        std::vector<Edge> des;
        std::vector<int> tri;
        for (int x = 0; x < 4; ++x)
          if (x != skip) tri.push_back(q[x]);
        des = {{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}};
        designations.push_back(des);
      }
      for (int center = 0; center < 4; ++center) {  // star designs, ascending center
        std::vector<Edge> des;
        for (int x = 0; x < 4; ++x)
          if (x != center)
            des.push_back({std::min(q[center], q[x]), std::max(q[center], q[x])});
        designations.push_back(des);
      }
      for (const auto& des : designations) {
        bool ok = true;
        for (int w : rest) {
          bool covered = false;
          for (auto [u, v] : des)
            if (g.has_edge(w, u) && g.has_edge(w, v)) {
              covered = true;
              break;
            }
          if (!covered) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        BlockKind kind;
        kind.tag = BlockKindTag::K4;
        kind.core = {-1, -1, -1};
        kind.red_edges = des;
        return kind;
      }
    }
    throw ClaimViolation("block contains K4 but no designation satisfies the K4 witness: " +
                         block_summary(b));
  }

  if (contains(bg, tp2)) {
    // Pyramid witness: a core triangle; all other block vertices pairwise
    // non-adjacent and each adjacent to exactly 2 core vertices.
    for (const Triangle& t : b.triangles) {
      std::uint64_t core_mask = (std::uint64_t{1} << t.a) | (std::uint64_t{1} << t.b) | (std::uint64_t{1} << t.c);
      std::vector<int> rest = minus(b.vertices, core_mask);
      if (!independent_in(g, rest)) continue;
      bool ok = true;
      for (int w : rest)
        if (std::popcount(g.adj[w] & core_mask) != 2) {
          ok = false;
          break;
        }
      if (!ok) continue;
      BlockKind kind;
      kind.tag = BlockKindTag::Pyramid;
      kind.core = {t.a, t.b, t.c};
      kind.red_edges = {{t.a, t.b}, {t.a, t.c}, {t.b, t.c}};
      return kind;
    }
    throw ClaimViolation("block contains TP2 but no core triangle satisfies the pyramid witness: " +
                         block_summary(b));
  }

  // Suspension witness: an apex adjacent to every other block vertex whose
  // removal leaves the block triangle-free.
  for (int apex : b.vertices) {
    bool dominates = true;
    for (int v : b.vertices)
      if (v != apex && !g.has_edge(apex, v)) {
        dominates = false;
        break;
      }
    if (!dominates) continue;
    Graph rest = Graph::empty(g.n);
    for (auto [u, v] : b.edges)
      if (u != apex && v != apex) rest.add_edge(u, v);
    if (triangle_count(rest) != 0) continue;
    BlockKind kind;
    kind.tag = BlockKindTag::Suspension;
    kind.core = {-1, -1, -1};
    kind.apex = apex;
    for (auto [u, v] : b.edges)
      if (u == apex || v == apex) kind.red_edges.push_back({u, v});
    return kind;
  }
  throw ClaimViolation("block matches no kind (K5-, K4, pyramid, suspension): " + block_summary(b));
}

Block grow(const Graph& g, std::span<const Edge> seed) {
  if (seed.empty()) throw std::invalid_argument("grow: empty seed");
  std::set<Edge> in_edges;
  for (auto [u, v] : seed) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= g.n || u == v || !g.has_edge(u, v))
      throw std::invalid_argument("grow: seed pair is not an edge of the graph");
    if (triangles_on_edge(g, u, v) == 0)
      throw std::invalid_argument("grow: seed edge lies in no triangle");
    in_edges.insert({u, v});
  }
  std::vector<Triangle> all = triangle_list(g);
  std::vector<bool> taken(all.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (taken[i]) continue;
      const Triangle& t = all[i];
      for (auto [u, v] : {std::pair{t.a, t.b}, std::pair{t.a, t.c}, std::pair{t.b, t.c}}) {
        if (in_edges.count({u, v})) {
          taken[i] = true;
          changed = true;
          break;
        }
      }
      if (taken[i]) {
        in_edges.insert({t.a, t.b});
        in_edges.insert({t.a, t.c});
        in_edges.insert({t.b, t.c});
      }
    }
  }
  std::vector<Triangle> tris;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (taken[i]) tris.push_back(all[i]);
  // A seed spanning several blocks would grow their union, which is not a block.
  std::set<Edge> tri_edges;
  for (const Triangle& t : tris) tri_edges.insert({{t.a, t.b}, {t.a, t.c}, {t.b, t.c}});
  for (auto [u, v] : seed) {
    Edge e{std::min(u, v), std::max(u, v)};
    if (!tri_edges.count(e)) throw std::invalid_argument("grow: seed edge not reachable");  // unreachable
  }
  if (tris.empty()) throw std::invalid_argument("grow: seed closure is empty");
  // Verify connectivity of the closure: it must be one block, i.e. every
  // triangle reachable from the first via shared edges.
  TriUF uf(static_cast<int>(tris.size()));
  std::map<int, int> first_on_edge;
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
    const Triangle& t = tris[i];
    for (auto [u, v] : {std::pair{t.a, t.b}, std::pair{t.a, t.c}, std::pair{t.b, t.c}}) {
      auto [it, fresh] = first_on_edge.try_emplace(edge_key(u, v), i);
      if (!fresh) uf.unite(i, it->second);
    }
  }
  int root = uf.find(0);
  for (int i = 1; i < static_cast<int>(tris.size()); ++i)
    if (uf.find(i) != root) throw std::invalid_argument("grow: seed edges span multiple blocks");
  return make_block(tris);
}

Coloring color(const Graph& g, const BlockDecomposition& d, const std::vector<BlockKind>& kinds) {
  if (kinds.size() != d.blocks.size())
    throw std::invalid_argument("color: kinds and blocks size mismatch");
  (void)g;
  Coloring c;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const Block& b = d.blocks[i];
    const BlockKind& k = kinds[i];
    BlockColoring bc;
    bc.kind = k.tag;
    std::set<Edge> red(k.red_edges.begin(), k.red_edges.end());
    for (const Edge& e : b.edges)
      (red.count(e) ? bc.red : bc.blue).push_back(e);
    c.red.insert(c.red.end(), bc.red.begin(), bc.red.end());
    c.blue.insert(c.blue.end(), bc.blue.begin(), bc.blue.end());
    c.per_block.push_back(std::move(bc));
  }
  return c;
}

AuditReport audit(const Graph& g) {
  if (!is_free(g, PatternId::path_power(6, 2)))
    throw std::invalid_argument("audit: graph contains P6^2");
  if (!is_free(g, PatternId::complete(5)))
    throw std::invalid_argument("audit: graph contains K5");

  AuditReport rep;
  rep.t = triangle_count(g);
  rep.e = g.edge_count();

  BlockDecomposition d = decompose(g);
  std::vector<BlockKind> kinds;
  bool classified_all = true;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    try {
      kinds.push_back(classify(g, d.blocks[i]));
      rep.kinds.push_back(kinds.back().tag);
    } catch (const ClaimViolation& cv) {
      classified_all = false;
      rep.violations.push_back(std::string("classification failed: ") + cv.what());
    }
  }
  rep.eb_le_turan = true;
  rep.edges_le_ex_applicable = g.n != 5;
  rep.edges_le_ex = true;
  if (rep.edges_le_ex_applicable) {
    long long bound = ex_edges_p62(g.n).value;
    rep.edges_le_ex = rep.e <= bound;
    if (!rep.edges_le_ex) {
      std::ostringstream os;
      os << "e(G) > t(n,2)+f(n): " << rep.e << " > " << bound;
      rep.violations.push_back(os.str());
    }
  }
  if (!classified_all) {
    rep.tri_le_blue_plus_B = rep.er_ge_3B = rep.per_block_bound = rep.blue_triangle_free = false;
    return rep;
  }

  Coloring col = color(g, d, kinds);
  rep.e_r = static_cast<long long>(col.red.size());
  rep.e_b = static_cast<long long>(col.blue.size());
  for (const BlockKind& k : kinds)
    if (k.tag == BlockKindTag::K5Minus) ++rep.B;

  rep.per_block_bound = true;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    long long tb = static_cast<long long>(d.blocks[i].triangles.size());
    long long blue = static_cast<long long>(col.per_block[i].blue.size());
    long long slack = kinds[i].tag == BlockKindTag::K5Minus ? 1 : 0;
    if (tb > blue + slack) {
      rep.per_block_bound = false;
      std::ostringstream os;
      os << "per-block bound fails: block " << i << " (" << to_string(kinds[i].tag) << ") has t=" << tb
         << " > blue=" << blue << " + " << slack;
      rep.violations.push_back(os.str());
    }
  }

  Graph blue_graph = Graph::empty(g.n);
  for (auto [u, v] : col.blue) blue_graph.add_edge(u, v);
  long long blue_tris = triangle_count(blue_graph);
  rep.blue_triangle_free = blue_tris == 0;
  if (blue_tris != 0) {
    Triangle t = triangle_list(blue_graph).front();
    std::ostringstream os;
    os << "blue subgraph has " << blue_tris << " triangle(s), e.g. {" << t.a << "," << t.b << "," << t.c
       << "}";
    rep.violations.push_back(os.str());
  }

  rep.tri_le_blue_plus_B = rep.t <= rep.e_b + rep.B;
  if (!rep.tri_le_blue_plus_B) {
    std::ostringstream os;
    os << "t(G) > e_b + B: " << rep.t << " > " << rep.e_b << " + " << rep.B;
    rep.violations.push_back(os.str());
  }
  rep.er_ge_3B = rep.e_r >= 3 * rep.B;
  if (!rep.er_ge_3B) {
    std::ostringstream os;
    os << "e_r < 3B: " << rep.e_r << " < 3*" << rep.B;
    rep.violations.push_back(os.str());
  }
  rep.eb_le_turan = rep.e_b <= turan_edges(g.n, 2);
  if (!rep.eb_le_turan) {
    std::ostringstream os;
    os << "e_b > t(n,2): " << rep.e_b << " > " << turan_edges(g.n, 2);
    rep.violations.push_back(os.str());
  }
  return rep;
}

}  // namespace turan
