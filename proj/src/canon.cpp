#include "turan/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "turan/graph6.hpp"

// Individualization-refinement canonical labeling (McKay style, specialized
// to n <= 64 bitset graphs). A partition is kept as nauty-style lab/ptn
// arrays: lab is a permutation of the vertices, ptn[i] == 1 iff positions i
// and i+1 belong to the same cell. The canonical form is the maximum, over
// discrete refinements reached in the search tree, of the permuted adjacency
// rows compared lexicographically. Pairs of equal-code leaves yield
// automorphisms; their orbits prune sibling branches. The generators found
// along the way generate the full automorphism group, so the reported vertex
// orbits are exact.

namespace turan {

namespace {

struct UnionFind {
  std::array<std::uint8_t, kMaxN> p;
  void init(int n) {
    for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
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
      p[b] = static_cast<std::uint8_t>(a);  // roots are class minima
    else
      p[a] = static_cast<std::uint8_t>(b);
  }
};

struct Searcher {
  const Graph* g = nullptr;
  int n = 0;
  bool have_best = false;
  std::array<std::uint64_t, kMaxN> best_rows{};
  Perm best_lab{};
  std::vector<Perm> gens;
  UnionFind orbits;
  std::array<int, kMaxN> prefix{};  // individualized vertices on the current path

  // Splits cells by popcount of adjacency into each splitter mask until no
  // splitter distinguishes anything (equitable partition).
  void refine(std::array<std::uint8_t, kMaxN>& lab, std::array<std::uint8_t, kMaxN>& ptn,
              std::uint64_t first_active) const {
    std::uint64_t queue[2 * kMaxN + 2];
    int qh = 0, qt = 0;
    queue[qt++] = first_active;
    int cnt[kMaxN];
    while (qh < qt) {
      std::uint64_t w = queue[qh++];
      for (int i = 0; i < n;) {
        int j = i;
        while (ptn[j]) ++j;  // cell occupies positions [i..j]
        if (j > i) {
          bool differ = false;
          cnt[i] = std::popcount(g->adj[lab[i]] & w);
          for (int p = i + 1; p <= j; ++p) {
            cnt[p] = std::popcount(g->adj[lab[p]] & w);
            differ |= cnt[p] != cnt[i];
          }
          if (differ) {
            for (int p = i + 1; p <= j; ++p) {  // insertion sort by count
              int vl = lab[p], vc = cnt[p], q = p - 1;
              while (q >= i && cnt[q] > vc) {
                lab[q + 1] = lab[q];
                cnt[q + 1] = cnt[q];
                --q;
              }
              lab[q + 1] = static_cast<std::uint8_t>(vl);
              cnt[q + 1] = vc;
            }
            int frag_start = i;
            for (int p = i; p <= j; ++p) {
              bool last = p == j || cnt[p + 1] != cnt[p];
              ptn[p] = last ? 0 : 1;
              if (last) {
                std::uint64_t m = 0;
                for (int q = frag_start; q <= p; ++q) m |= std::uint64_t{1} << lab[q];
                queue[qt++] = m;
                frag_start = p + 1;
              }
            }
          }
        }
        i = j + 1;
      }
    }
  }

  void leaf(const std::array<std::uint8_t, kMaxN>& lab) {
    std::array<std::uint8_t, kMaxN> pos{};
    for (int i = 0; i < n; ++i) pos[lab[i]] = static_cast<std::uint8_t>(i);
    std::array<std::uint64_t, kMaxN> rows{};
    for (int i = 0; i < n; ++i) {
      std::uint64_t r = 0, nb = g->adj[lab[i]];
      while (nb) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        r |= std::uint64_t{1} << pos[v];
      }
      rows[i] = r;
    }
    int cmp = 0;
    if (have_best) {
      for (int i = 0; i < n; ++i)
        if (rows[i] != best_rows[i]) {
          cmp = rows[i] > best_rows[i] ? 1 : -1;
          break;
        }
    }
    if (!have_best || cmp > 0) {
      have_best = true;
      best_rows = rows;
      for (int i = 0; i < n; ++i) best_lab[i] = lab[i];
      return;
    }
    if (cmp < 0) return;
    Perm pi{};
    bool identity = true;
    for (int i = 0; i < n; ++i) {
      pi[lab[i]] = best_lab[i];
      identity &= lab[i] == best_lab[i];
    }
    if (identity) return;
    for (int v = 0; v < n; ++v) orbits.unite(v, pi[v]);
    gens.push_back(pi);
  }

  void search(std::array<std::uint8_t, kMaxN> lab, std::array<std::uint8_t, kMaxN> ptn,
              std::uint64_t active, int depth) {
    refine(lab, ptn, active);
    int s = -1;
    for (int i = 0; i < n; ++i)
      if (ptn[i]) {
        s = i;
        break;
      }
    if (s < 0) {
      leaf(lab);
      return;
    }
    int e = s;
    while (ptn[e]) ++e;  // target cell [s..e], the first non-singleton
    int verts[kMaxN], m = 0;
    for (int p = s; p <= e; ++p) verts[m++] = lab[p];
    int tried[kMaxN], nt = 0;
    UnionFind stab;
    std::size_t stab_gens = static_cast<std::size_t>(-1);
    for (int idx = 0; idx < m; ++idx) {
      int v = verts[idx];
      if (nt > 0) {
        // Prune v if an automorphism fixing the individualized prefix
        // pointwise maps it into an already-explored sibling's orbit.
        if (stab_gens != gens.size()) {
          stab.init(n);
          for (const Perm& pi : gens) {
            bool fixes = true;
            for (int d = 0; d < depth && fixes; ++d) fixes = pi[prefix[d]] == prefix[d];
            if (fixes)
              for (int x = 0; x < n; ++x) stab.unite(x, pi[x]);
          }
          stab_gens = gens.size();
        }
        int rv = stab.find(v);
        bool skip = false;
        for (int t = 0; t < nt && !skip; ++t) skip = stab.find(tried[t]) == rv;
        if (skip) continue;
      }
      auto clab = lab;
      auto cptn = ptn;
      int pos = s;
      while (clab[pos] != v) ++pos;
      while (pos > s) {
        clab[pos] = clab[pos - 1];
        --pos;
      }
      clab[s] = static_cast<std::uint8_t>(v);
      cptn[s] = 0;
      prefix[depth] = v;
      search(clab, cptn, std::uint64_t{1} << v, depth + 1);
      tried[nt++] = v;
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm out;
  out.graph = Graph::empty(g.n);
  out.lab.fill(0);
  out.orbit.fill(0);
  if (g.n == 0) return out;

  Searcher s;
  s.g = &g;
  s.n = g.n;
  s.orbits.init(g.n);
  std::array<std::uint8_t, kMaxN> lab{}, ptn{};
  for (int i = 0; i < g.n; ++i) {
    lab[i] = static_cast<std::uint8_t>(i);
    ptn[i] = i + 1 < g.n ? 1 : 0;
  }
  s.search(lab, ptn, g.vertex_mask(), 0);

  out.lab = s.best_lab;
  for (int i = 0; i < g.n; ++i) out.graph.adj[i] = s.best_rows[i];
  for (int v = 0; v < g.n; ++v) out.orbit[v] = static_cast<std::uint8_t>(s.orbits.find(v));
  out.generators = std::move(s.gens);
  return out;
}

std::string canonical_graph6(const Graph& g) { return graph6_encode(canonical_form(g).graph); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace turan
