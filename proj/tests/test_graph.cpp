#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "turan/graph.hpp"
#include "turan/patterns.hpp"

using namespace turan;

namespace {

Graph complete(int n) {
  Graph g = Graph::empty(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  Graph g = Graph::empty(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g = Graph::empty(5);
  CHECK(g.n == 5);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  CHECK(g.has_edge(0, 3));
  CHECK(g.has_edge(3, 0));
  CHECK(!g.has_edge(0, 4));
  CHECK(g.degree(3) == 2);
  CHECK(g.edge_count() == 2);
  g.remove_edge(3, 0);
  CHECK(!g.has_edge(0, 3));
  CHECK(g.edge_count() == 1);

  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Graph::empty(65), std::invalid_argument);
  CHECK_THROWS_AS(Graph::empty(-1), std::invalid_argument);
  CHECK(Graph::empty(0).edge_count() == 0);
  CHECK(Graph::empty(64).vertex_mask() == ~std::uint64_t{0});
}

TEST_CASE("structural equality ignores nothing") {
  Graph a = Graph::empty(4);
  a.add_edge(0, 1);
  Graph b = Graph::empty(4);
  b.add_edge(0, 1);
  CHECK(a == b);
  b.add_edge(2, 3);
  CHECK(a != b);
  // Same edges, different order: rows beyond n stay zero, so equality is exact.
  Graph c = Graph::empty(5);
  c.add_edge(0, 1);
  CHECK(a != c);  // different n
}

TEST_CASE("edges() lists ascending pairs") {
  Graph g = Graph::empty(4);
  g.add_edge(2, 3);
  g.add_edge(0, 2);
  g.add_edge(0, 1);
  auto e = g.edges();
  REQUIRE(e.size() == 3);
  CHECK(e[0] == std::pair{0, 1});
  CHECK(e[1] == std::pair{0, 2});
  CHECK(e[2] == std::pair{2, 3});
}

TEST_CASE("triangle counting on complete graphs") {
  auto c3 = [](long long n) { return n * (n - 1) * (n - 2) / 6; };
  for (int n : {3, 4, 5, 6, 10, 20}) {
    Graph g = complete(n);
    CHECK(triangle_count(g) == c3(n));
    CHECK((long long)triangle_list(g).size() == c3(n));
  }
  CHECK(triangle_count(Graph::empty(0)) == 0);
  CHECK(triangle_count(cycle(5)) == 0);
  CHECK(triangle_count(cycle(3)) == 1);

  // Vertex 63 must not wrap the bit arithmetic (shift-by-64 regression).
  Graph k64 = complete(64);
  CHECK(triangle_count(k64) == c3(64));
  CHECK((long long)triangle_list(k64).size() == c3(64));
  CHECK((long long)k64.edges().size() == 64 * 63 / 2);
  Graph tail = Graph::empty(64);
  tail.add_edge(62, 63);
  tail.add_edge(61, 63);
  tail.add_edge(61, 62);
  CHECK(triangle_count(tail) == 1);
  CHECK(tail.edges() == std::vector<std::pair<int, int>>{{61, 62}, {61, 63}, {62, 63}});
}

TEST_CASE("triangle_list is sorted ascending with a<b<c") {
  Graph g = complete(6);
  auto ts = triangle_list(g);
  CHECK(std::is_sorted(ts.begin(), ts.end()));
  for (const Triangle& t : ts) {
    CHECK(t.a < t.b);
    CHECK(t.b < t.c);
  }
}

TEST_CASE("triangles_on_edge and edge_type") {
  Graph g = complete(6);              // every edge lies in 4 triangles
  CHECK(triangles_on_edge(g, 0, 1) == 4);
  CHECK(edge_type(g, 0, 1) == EdgeType::FourPlus);

  Graph k4 = complete(4);
  CHECK(triangles_on_edge(k4, 1, 2) == 2);
  CHECK(edge_type(k4, 1, 2) == EdgeType::Two);

  Graph c5 = cycle(5);
  CHECK(triangles_on_edge(c5, 0, 1) == 0);
  CHECK(edge_type(c5, 0, 1) == EdgeType::None);
  CHECK_THROWS_AS(edge_type(c5, 0, 2), std::invalid_argument);

  Graph k7 = complete(7);  // 5 triangles per edge still reports 4+
  CHECK(triangles_on_edge(k7, 0, 1) == 5);
  CHECK(edge_type(k7, 0, 1) == EdgeType::FourPlus);
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(Graph::empty(3)));
  CHECK(is_bipartite(cycle(6)));
  CHECK(!is_bipartite(cycle(5)));
  CHECK(!is_bipartite(complete(3)));
  CHECK(is_bipartite(build(PatternId::turan(10, 2))));
  CHECK(!is_bipartite(build(PatternId::turan(9, 3))));
  // Disconnected: even cycle + odd cycle.
  Graph g = Graph::empty(9);
  for (int v = 0; v < 4; ++v) g.add_edge(v, (v + 1) % 4);
  for (int v = 0; v < 5; ++v) g.add_edge(4 + v, 4 + (v + 1) % 5);
  CHECK(!is_bipartite(g));
}

TEST_CASE("induced subgraph") {
  Graph g = complete(5);
  g.remove_edge(1, 3);
  std::vector<int> map;
  Graph h = induced_subgraph(g, 0b01011u, &map);  // vertices 0,1,3
  CHECK(h.n == 3);
  CHECK(map == std::vector<int>{0, 1, 3});
  CHECK(h.has_edge(0, 1));   // 0-1
  CHECK(h.has_edge(0, 2));   // 0-3
  CHECK(!h.has_edge(1, 2));  // 1-3 removed
  CHECK(induced_subgraph(g, 0).n == 0);
  CHECK(induced_subgraph(g, g.vertex_mask()).edge_count() == g.edge_count());
}

TEST_CASE("relabeled permutes adjacency") {
  Graph g = Graph::empty(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  std::array<std::uint8_t, kMaxN> lab{};
  std::iota(lab.begin(), lab.end(), 0);
  std::swap(lab[0], lab[3]);  // position 0 holds old vertex 3, position 3 old 0
  Graph h = relabeled(g, lab);
  CHECK(h.n == 4);
  CHECK(h.edge_count() == 2);
  CHECK(h.has_edge(3, 1));  // old edge 0-1
  CHECK(h.has_edge(1, 2));  // old edge 1-2
  CHECK(!h.has_edge(0, 1));
}
