#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct PatternError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class PatternKind {
  PathPower,          // P_k^p: path on k vertices plus all pairs at distance <= p
  TriangularPyramid,  // TP_k: triangular grid with k+1 layers
  Complete,           // K_s
  K5Minus,            // K_5 minus one edge
  Turan,              // T(n,r)
  Star,               // S_k: k+1 vertices
  Hni,                // H_n^i: K_{i,n-i} + i/3 disjoint triangles partitioning X
  Fnij,               // F_n^{i,j}: K_{i,n-i} + S_{j-1} + (i-j)/3 triangles on X
  MatchedBipartite,   // K_{n/2,n/2} + floor(n/4) disjoint edges in each part
};

struct PatternId {
  PatternKind kind;
  int a = 0, b = 0, c = 0;  // parameters in declaration order

  static PatternId path_power(int k, int p) { return {PatternKind::PathPower, k, p, 0}; }
  static PatternId tp(int k) { return {PatternKind::TriangularPyramid, k, 0, 0}; }
  static PatternId complete(int s) { return {PatternKind::Complete, s, 0, 0}; }
  static PatternId k5_minus() { return {PatternKind::K5Minus, 0, 0, 0}; }
  static PatternId turan(int n, int r) { return {PatternKind::Turan, n, r, 0}; }
  static PatternId star(int k) { return {PatternKind::Star, k, 0, 0}; }
  static PatternId hni(int n, int i) { return {PatternKind::Hni, n, i, 0}; }
  static PatternId fnij(int n, int i, int j) { return {PatternKind::Fnij, n, i, j}; }
  static PatternId matched_bipartite(int n) { return {PatternKind::MatchedBipartite, n, 0, 0}; }

  bool operator==(const PatternId&) const = default;
};

// Throws PatternError naming the violated constraint.
Graph build(const PatternId& p);

// Text syntax: P6^2, TP3, K5, K5-, T(12,2), S4, H(12,6), F(13,7,1), MB(12).
// Case-insensitive. Throws PatternError on malformed input.
PatternId parse_pattern(std::string_view s);
std::string to_string(const PatternId& p);

// Non-induced subgraph containment. Returns a pattern-vertex -> host-vertex
// embedding when present. Pattern vertices are tried in descending-degree
// order with bitset candidate pruning.
std::optional<std::vector<int>> contains(const Graph& host, const Graph& pattern);

bool is_free(const Graph& host, const Graph& pattern);
bool is_free(const Graph& host, const PatternId& p);

// True iff some embedding maps a pattern edge onto host edge uv.
// If host minus uv is pattern-free, this decides containment in host.
bool contains_new_edge(const Graph& host, const Graph& pattern, int u, int v);

// True iff some embedding uses the given host vertex. If host minus that
// vertex is pattern-free, this decides containment in host.
bool contains_using_vertex(const Graph& host, const Graph& pattern, int host_vertex);

}  // namespace turan
