#include "turan/graph.hpp"

#include <bit>

namespace turan {

long long triangle_count(const Graph& g) {
  long long t = 0;
  for (int u = 0; u < g.n; ++u) {
    std::uint64_t hi = g.adj[u] & bits_above(u);
    while (hi) {
      int v = std::countr_zero(hi);
      hi &= hi - 1;
      std::uint64_t common = g.adj[u] & g.adj[v];
      t += std::popcount(common & bits_above(v));
    }
  }
  return t;
}

std::vector<Triangle> triangle_list(const Graph& g) {
  std::vector<Triangle> out;
  for (int u = 0; u < g.n; ++u) {
    std::uint64_t hi = g.adj[u] & bits_above(u);
    while (hi) {
      int v = std::countr_zero(hi);
      hi &= hi - 1;
      std::uint64_t common = g.adj[u] & g.adj[v] & bits_above(v);
      while (common) {
        int w = std::countr_zero(common);
        common &= common - 1;
        out.push_back({u, v, w});
      }
    }
  }
  return out;
}

int triangles_on_edge(const Graph& g, int u, int v) {
  return std::popcount(g.adj[u] & g.adj[v]);
}

EdgeType edge_type(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v || !g.has_edge(u, v))
    throw std::invalid_argument("edge_type: uv is not an edge");
  int k = triangles_on_edge(g, u, v);
  if (k >= 4) return EdgeType::FourPlus;
  return static_cast<EdgeType>(k);
}

bool is_bipartite(const Graph& g) {
  std::array<int, kMaxN> side{};
  side.fill(-1);
  for (int s = 0; s < g.n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      std::uint64_t nb = g.adj[u];
      while (nb) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask, std::vector<int>* out_map) {
  mask &= g.vertex_mask();
  std::vector<int> verts;
  std::uint64_t m = mask;
  while (m) {
    verts.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  Graph h = Graph::empty(static_cast<int>(verts.size()));
  for (int i = 0; i < h.n; ++i)
    for (int j = i + 1; j < h.n; ++j)
      if (g.has_edge(verts[i], verts[j])) h.add_edge(i, j);
  if (out_map) *out_map = std::move(verts);
  return h;
}

Graph relabeled(const Graph& g, const std::array<std::uint8_t, kMaxN>& lab) {
  Graph h = Graph::empty(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.has_edge(lab[i], lab[j])) h.add_edge(i, j);
  return h;
}

}  // namespace turan
