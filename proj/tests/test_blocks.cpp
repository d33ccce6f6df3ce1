#include <algorithm>
#include <set>

#include "doctest.h"
#include "turan/blocks.hpp"
#include "turan/graph6.hpp"
#include "turan/patterns.hpp"

using namespace turan;

namespace {

Graph complete(int n) {
  Graph g = Graph::empty(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Book B_m: apex 0 joined to a path 1..m+1.
Graph book(int m) {
  Graph g = Graph::empty(m + 2);
  for (int v = 1; v <= m + 1; ++v) g.add_edge(0, v);
  for (int v = 1; v <= m; ++v) g.add_edge(v, v + 1);
  return g;
}

bool has_edge_in(const std::vector<Edge>& es, int u, int v) {
  return std::find(es.begin(), es.end(), Edge{std::min(u, v), std::max(u, v)}) != es.end();
}

}  // namespace

TEST_CASE("normalize strips type-0 edges") {
  Graph g = complete(4);
  g.n = 6;  // two extra isolated vertices
  g.add_edge(3, 4);
  g.add_edge(4, 5);  // pendant path in no triangle
  Graph n = normalize(g);
  CHECK(n.edge_count() == 6);
  CHECK(!n.has_edge(3, 4));
  CHECK(!n.has_edge(4, 5));
  CHECK(triangle_count(n) == triangle_count(g));
}

TEST_CASE("decompose partitions triangles") {
  // Two disjoint triangles plus a bridge edge in no triangle.
  Graph g = Graph::empty(6);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  g.add_edge(4, 5);
  g.add_edge(2, 3);
  BlockDecomposition d = decompose(g);
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(d.blocks[1].vertices == std::vector<int>{3, 4, 5});
  CHECK(d.blocks[0].triangles.size() == 1);
  CHECK(d.unassigned_edges == std::vector<Edge>{{2, 3}});

  // H(12,6): the two X-triangles pull in all of Y -> exactly two blocks
  // sharing the six Y vertices; every triangle assigned exactly once.
  Graph h = build(parse_pattern("H(12,6)"));
  BlockDecomposition hd = decompose(h);
  REQUIRE(hd.blocks.size() == 2);
  CHECK(hd.unassigned_edges.empty());
  std::set<Triangle> seen;
  std::size_t total = 0;
  for (const Block& b : hd.blocks) {
    total += b.triangles.size();
    seen.insert(b.triangles.begin(), b.triangles.end());
  }
  CHECK(total == seen.size());
  CHECK(static_cast<long long>(total) == triangle_count(h));

  CHECK(decompose(Graph::empty(5)).blocks.empty());
}

TEST_CASE("grow reproduces the block of a seed edge") {
  Graph h = build(parse_pattern("H(12,6)"));
  BlockDecomposition d = decompose(h);
  // Seed with the first X-triangle's edge 0-1.
  Block b = grow(h, std::vector<Edge>{{0, 1}});
  CHECK(b.vertices == d.blocks[0].vertices);
  CHECK(b.triangles == d.blocks[0].triangles);
  CHECK(b.edges == d.blocks[0].edges);

  // A seed spanning both blocks is rejected.
  CHECK_THROWS_AS(grow(h, std::vector<Edge>{{0, 1}, {3, 4}}), std::invalid_argument);
  // Non-edge seeds, triangle-free seeds, empty seeds are rejected.
  CHECK_THROWS_AS(grow(h, std::vector<Edge>{{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(grow(h, std::vector<Edge>{}), std::invalid_argument);
  Graph c5 = Graph::empty(5);
  for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  CHECK_THROWS_AS(grow(c5, std::vector<Edge>{{0, 1}}), std::invalid_argument);
}

TEST_CASE("classification: bare triangle is a suspension") {
  Graph g = complete(3);
  BlockDecomposition d = decompose(g);
  REQUIRE(d.blocks.size() == 1);
  BlockKind k = classify(g, d.blocks[0]);
  CHECK(k.tag == BlockKindTag::Suspension);
  CHECK(k.apex == 0);
  CHECK(k.red_edges.size() == 2);  // apex-incident; one blue edge remains
}

TEST_CASE("classification: bare K4") {
  Graph g = complete(4);
  BlockKind k = classify(g, decompose(g).blocks[0]);
  CHECK(k.tag == BlockKindTag::K4);
  REQUIRE(k.red_edges.size() == 2);  // two disjoint red edges
  CHECK(k.red_edges[0] == Edge{0, 1});
  CHECK(k.red_edges[1] == Edge{2, 3});
}

TEST_CASE("classification: K5 minus an edge") {
  Graph g = build(parse_pattern("K5-"));
  BlockKind k = classify(g, decompose(g).blocks[0]);
  CHECK(k.tag == BlockKindTag::K5Minus);
  CHECK(k.red_edges.size() == 3);
}

TEST_CASE("classification: pyramid via TP2") {
  Graph g = build(parse_pattern("TP2"));
  BlockKind k = classify(g, decompose(g).blocks[0]);
  CHECK(k.tag == BlockKindTag::Pyramid);
  // Core must be the central triangle {1,2,4} in layer labeling.
  CHECK(k.core == std::array<int, 3>{1, 2, 4});
  CHECK(k.red_edges.size() == 3);
}

TEST_CASE("classification: books are suspensions") {
  // No TP2 fits in a book (every two triangles share the apex), so books
  // classify as suspensions with the apex red.
  for (int m : {3, 4, 6}) {
    Graph b = book(m);
    BlockKind k = classify(b, decompose(b).blocks[0]);
    CHECK(k.tag == BlockKindTag::Suspension);
    CHECK(k.apex == 0);
    CHECK(static_cast<int>(k.red_edges.size()) == m + 1);
    AuditReport rep = audit(b);
    CHECK(rep.ok());
    CHECK(rep.t == m);      // tight: t = e_b = path edges
    CHECK(rep.e_b == m);
  }
}

TEST_CASE("classification: K_{4,4} plus an in-part edge is a suspension") {
  Graph g = build(parse_pattern("T(8,2)"));
  g.add_edge(0, 1);  // every triangle runs through this edge; no TP2 fits
  BlockDecomposition d = decompose(g);
  REQUIRE(d.blocks.size() == 1);
  BlockKind k = classify(g, d.blocks[0]);
  CHECK(k.tag == BlockKindTag::Suspension);
  CHECK(k.apex == 0);
  AuditReport rep = audit(g);
  CHECK(rep.ok());
  CHECK(rep.t == 4);
}

TEST_CASE("coloring unions match per-block designations") {
  Graph h = build(parse_pattern("H(12,6)"));
  BlockDecomposition d = decompose(h);
  std::vector<BlockKind> kinds;
  for (const Block& b : d.blocks) kinds.push_back(classify(h, b));
  Coloring c = color(h, d, kinds);
  CHECK(c.per_block.size() == 2);
  CHECK(c.red.size() == 6);    // two K5Minus cores
  CHECK(c.blue.size() == 36);
  CHECK(has_edge_in(c.red, 0, 1));
  CHECK(has_edge_in(c.red, 3, 4));
  for (const Edge& e : c.red) CHECK(!has_edge_in(c.blue, e.first, e.second));
}

TEST_CASE("audit certifies H(12,6) tightly") {
  AuditReport rep = audit(build(parse_pattern("H(12,6)")));
  CHECK(rep.ok());
  CHECK(rep.t == 38);
  CHECK(rep.e == 42);
  CHECK(rep.e_b == 36);
  CHECK(rep.e_r == 6);
  CHECK(rep.B == 2);
  CHECK(rep.t == rep.e_b + rep.B);  // the counting bound t = e_b + B is sharp here
  CHECK(rep.tri_le_blue_plus_B);
  CHECK(rep.er_ge_3B);
  CHECK(rep.eb_le_turan);
  CHECK(rep.edges_le_ex);
  CHECK(rep.per_block_bound);
  CHECK(rep.blue_triangle_free);
  CHECK(rep.kinds == std::vector<BlockKindTag>{BlockKindTag::K5Minus, BlockKindTag::K5Minus});
}

TEST_CASE("audit rejects hypothesis violations") {
  CHECK_THROWS_AS(audit(build(parse_pattern("P7^2"))), std::invalid_argument);
  CHECK_THROWS_AS(audit(complete(5)), std::invalid_argument);
  CHECK_THROWS_AS(audit(complete(6)), std::invalid_argument);
}

// Blue-triangle-freeness of the coloring is falsifiable: a K4 whose external triangles pin all
// three star edges at one vertex forces the opposite core triangle all-blue.
// The counting inequality t <= e_b + B still holds; only blue-triangle-
// freeness fails. Frozen as a regression so the falsification stays visible.
TEST_CASE("claim 7 counterexample: star-designated K4") {
  Graph g = graph6_decode("F~qc_");  // K4 on 0..3; 4~{0,1}, 5~{0,2}, 6~{0,3}
  REQUIRE(g.n == 7);
  REQUIRE(is_free(g, parse_pattern("P6^2")));
  REQUIRE(is_free(g, parse_pattern("K5")));

  BlockDecomposition d = decompose(g);
  REQUIRE(d.blocks.size() == 1);
  BlockKind k = classify(g, d.blocks[0]);
  CHECK(k.tag == BlockKindTag::K4);
  // The only valid designation is the star at vertex 0.
  REQUIRE(k.red_edges.size() == 3);
  CHECK(has_edge_in(k.red_edges, 0, 1));
  CHECK(has_edge_in(k.red_edges, 0, 2));
  CHECK(has_edge_in(k.red_edges, 0, 3));

  AuditReport rep = audit(g);
  CHECK(!rep.ok());
  CHECK(!rep.blue_triangle_free);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].find("blue") != std::string::npos);
  // Everything else about the counting argument survives.
  CHECK(rep.t == 7);
  CHECK(rep.e == 12);
  CHECK(rep.e_r == 3);
  CHECK(rep.e_b == 9);
  CHECK(rep.B == 0);
  CHECK(rep.tri_le_blue_plus_B);
  CHECK(rep.per_block_bound);
  CHECK(rep.edges_le_ex);
}

TEST_CASE("audit accepts assorted free graphs") {
  for (const char* s : {"H(11,6)", "H(17,9)", "F(13,7,4)", "T(14,2)", "TP2", "K4", "K5-"}) {
    AuditReport rep = audit(build(parse_pattern(s)));
    CHECK(rep.tri_le_blue_plus_B);
    CHECK(rep.per_block_bound);
  }
  // Triangle-free graphs audit trivially.
  AuditReport empty = audit(build(parse_pattern("T(10,2)")));
  CHECK(empty.ok());
  CHECK(empty.t == 0);
  CHECK(empty.B == 0);
}
