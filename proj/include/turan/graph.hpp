#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turan {

// Dense graph on at most 64 vertices; adj[v] is the neighbor bitset of v.
// Rows at index >= n and bits >= n are kept zero so operator== is structural.
constexpr int kMaxN = 64;

// Mask of the bits strictly above position k. Two single shifts keep the
// count below 64 for every k in [0, 63], where >> (k + 1) would be UB at 63.
constexpr std::uint64_t bits_above(int k) { return ~std::uint64_t{0} << k << 1; }

struct Graph {
  int n = 0;
  std::array<std::uint64_t, kMaxN> adj{};

  static Graph empty(int n) {
    if (n < 0 || n > kMaxN) throw std::invalid_argument("graph order must be in [0,64]");
    Graph g;
    g.n = n;
    return g;
  }

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj[u] &= ~(std::uint64_t{1} << v);
    adj[v] &= ~(std::uint64_t{1} << u);
  }

  std::uint64_t neighbors(int v) const { return adj[v]; }
  int degree(int v) const { return std::popcount(adj[v]); }

  std::uint64_t vertex_mask() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  long long edge_count() const {
    long long s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) {
      std::uint64_t hi = adj[u] & bits_above(u);
      while (hi) {
        int v = std::countr_zero(hi);
        hi &= hi - 1;
        e.emplace_back(u, v);
      }
    }
    return e;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("vertex pair out of range");
  }
};

struct Triangle {
  int a, b, c;  // a < b < c
  auto operator<=>(const Triangle&) const = default;
};

// Type of an edge = how many triangles contain it, capped at 4 ("4+").
// None is the type-0 outcome: an edge lying in no triangle.
enum class EdgeType : int { None = 0, One = 1, Two = 2, Three = 3, FourPlus = 4 };

long long triangle_count(const Graph& g);
std::vector<Triangle> triangle_list(const Graph& g);

// Number of triangles through edge uv (uncapped).
int triangles_on_edge(const Graph& g, int u, int v);
// Throws std::invalid_argument when uv is not an edge of g.
EdgeType edge_type(const Graph& g, int u, int v);

bool is_bipartite(const Graph& g);

// g restricted to the vertices in mask, relabeled 0..k-1 in ascending
// original order; out_map (optional) receives new-index -> original-vertex.
Graph induced_subgraph(const Graph& g, std::uint64_t mask, std::vector<int>* out_map = nullptr);

// Copy of g with vertex lab[i] of g placed at position i.
Graph relabeled(const Graph& g, const std::array<std::uint8_t, kMaxN>& lab);

}  // namespace turan
