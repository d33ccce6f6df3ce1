#include <set>

#include "doctest.h"
#include "turan/formulas.hpp"
#include "turan/patterns.hpp"

using namespace turan;

TEST_CASE("turan_edges") {
  for (int n = 0; n <= 64; ++n) CHECK(turan_edges(n, 2) == static_cast<long long>(n) * n / 4);
  CHECK(turan_edges(9, 3) == 27);
  CHECK(turan_edges(7, 3) == 16);
  CHECK(turan_edges(10, 1) == 0);
  CHECK(turan_edges(10, 10) == 45);
  CHECK(turan_edges(10, 20) == 45);  // more parts than vertices
  CHECK(turan_edges(0, 3) == 0);
  CHECK_THROWS_AS(turan_edges(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(turan_edges(5, 0), std::invalid_argument);
}

TEST_CASE("residue polynomial forms of t(n,2), f, g") {
  for (int k = 0; 6 * k + 5 <= 64; ++k) {
    long long K = k;
    if (6 * k >= 1) {
      CHECK(turan_edges(6 * k, 2) == 9 * K * K);
      CHECK(f_of(6 * k) == 3 * K);
      CHECK(g_of(6 * k) == K);
    }
    CHECK(turan_edges(6 * k + 1, 2) == 9 * K * K + 3 * K);
    CHECK(f_of(6 * k + 1) == 3 * K);
    CHECK(g_of(6 * k + 1) == K);
    CHECK(turan_edges(6 * k + 2, 2) == 9 * K * K + 6 * K + 1);
    CHECK(f_of(6 * k + 2) == 3 * K);
    CHECK(g_of(6 * k + 2) == K - 1);
    CHECK(turan_edges(6 * k + 3, 2) == 9 * K * K + 9 * K + 2);
    CHECK(f_of(6 * k + 3) == 3 * K + 1);
    CHECK(g_of(6 * k + 3) == K - 1);
    CHECK(turan_edges(6 * k + 4, 2) == 9 * K * K + 12 * K + 4);
    CHECK(f_of(6 * k + 4) == 3 * K + 2);
    CHECK(g_of(6 * k + 4) == K);
    CHECK(turan_edges(6 * k + 5, 2) == 9 * K * K + 15 * K + 6);
    CHECK(f_of(6 * k + 5) == 3 * K + 3);
    CHECK(g_of(6 * k + 5) == K + 1);
  }
}

TEST_CASE("closed forms and validity flags") {
  CHECK(ex_edges_p62(12).value == 42);
  CHECK(ex_edges_p62(12).theorem_backed());
  CHECK(ex_edges_p62(5).value == 9);
  CHECK((ex_edges_p62(5).flags & kExcludedN) != 0);
  CHECK((ex_edges_p62(4).flags & kBelowValidRange) != 0);
  CHECK(ex_edges_p62(4).value == 6);

  CHECK(ex_triangles_p62(11).value == 32);
  CHECK(ex_triangles_p62(11).theorem_backed());
  CHECK(ex_triangles_p62(12).value == 38);
  CHECK((ex_triangles_p62(10).flags & kBelowValidRange) != 0);

  CHECK(ex_triangles_p52(4).value == 4);
  CHECK(ex_triangles_p52(5).value == 4);
  CHECK(ex_triangles_p52(6).value == 5);
  CHECK(ex_triangles_p52(7).value == 8);
  CHECK(ex_triangles_p52(8).value == 8);
  CHECK(ex_triangles_p52(9).value == 10);
  CHECK(ex_triangles_p52(12).value == 18);
  CHECK((ex_triangles_p52(3).flags & kOutOfRange) != 0);
  CHECK(ex_triangles_p52(3).value == 0);

  CHECK(ex_edges_tp2(6).value == 11);   // n = 2 (mod 4) adjustment
  CHECK(ex_edges_tp2(7).value == 15);
  CHECK(ex_edges_tp2(8).value == 20);
  CHECK(ex_edges_tp2(9).value == 24);
  CHECK((ex_edges_tp2(5).flags & kExcludedN) != 0);

  CHECK(tri_tp2_upper(22).value == 120);
  CHECK(tri_tp2_upper(22).theorem_backed());
  CHECK(tri_tp2_upper(24).value == 144);
  CHECK((tri_tp2_upper(23).flags & kNonIntegral) != 0);
  CHECK((tri_tp2_upper(12).flags & kBelowValidRange) != 0);
}

TEST_CASE("frozen table row n = 12") {
  FormulaTableRow r = table_row(12);
  CHECK(r.n == 12);
  CHECK(r.t2 == 36);
  CHECK(r.f == 6);
  CHECK(r.g == 2);
  CHECK(r.ex_edges_p62.value == 42);
  CHECK(r.ex_tri_p62.value == 38);
  CHECK(r.ex_tri_p52.value == 18);
  CHECK(r.ex_edges_tp2.value == 42);
  CHECK(r.tri_tp2_bound.value == 36);
}

TEST_CASE("cross-theorem invariants") {
  for (int n = 6; n <= 64; ++n) {
    CHECK(ex_triangles_p62(n).value <= ex_edges_p62(n).value);  // t(G) <= e(G)
    CHECK(g_of(n) <= f_of(n) / 3 + 1);
  }
}

TEST_CASE("edge-extremal families per residue") {
  // n = 13 = 6*2+1: H(13,6) plus F(13,7,j) for j in {1,4,7}.
  ExtremalFamily fam = extremal_family(13, Objective::Edges);
  REQUIRE(fam.members.size() == 4);
  CHECK(fam.members[0] == PatternId::hni(13, 6));
  CHECK(fam.members[1] == PatternId::fnij(13, 7, 1));
  CHECK(fam.members[2] == PatternId::fnij(13, 7, 4));
  CHECK(fam.members[3] == PatternId::fnij(13, 7, 7));
  CHECK(fam.flags == kTheoremBacked);

  CHECK(extremal_family(12, Objective::Edges).members ==
        std::vector<PatternId>{PatternId::hni(12, 6)});
  CHECK(extremal_family(16, Objective::Edges).members ==
        std::vector<PatternId>{PatternId::hni(16, 9)});
  CHECK(extremal_family(17, Objective::Edges).members ==
        std::vector<PatternId>{PatternId::hni(17, 9)});

  // n = 14 = 6*2+2: F(14,7,j) j in {1,4,7} then F(14,8,j) j in {2,5,8}.
  ExtremalFamily f14 = extremal_family(14, Objective::Edges);
  REQUIRE(f14.members.size() == 6);
  CHECK(f14.members[0] == PatternId::fnij(14, 7, 1));
  CHECK(f14.members[3] == PatternId::fnij(14, 8, 2));

  // n = 15 = 6*2+3: H(15,9) plus F(15,8,j) j in {2,5,8}.
  ExtremalFamily f15 = extremal_family(15, Objective::Edges);
  REQUIRE(f15.members.size() == 4);
  CHECK(f15.members[0] == PatternId::hni(15, 9));
  CHECK(f15.members[1] == PatternId::fnij(15, 8, 2));

  CHECK((extremal_family(5, Objective::Edges).flags & kExcludedN) != 0);
}

TEST_CASE("triangle-extremal families per residue") {
  CHECK(extremal_family(11, Objective::Triangles).members ==
        std::vector<PatternId>{PatternId::hni(11, 6)});  // r=5: i=(n+1)/2
  CHECK(extremal_family(12, Objective::Triangles).members ==
        std::vector<PatternId>{PatternId::hni(12, 6)});
  CHECK(extremal_family(13, Objective::Triangles).members ==
        std::vector<PatternId>{PatternId::hni(13, 6)});
  CHECK(extremal_family(14, Objective::Triangles).members ==
        std::vector<PatternId>{PatternId::hni(14, 6)});
  CHECK(extremal_family(15, Objective::Triangles).members ==
        std::vector<PatternId>{PatternId::hni(15, 9)});
  CHECK(extremal_family(16, Objective::Triangles).members ==
        std::vector<PatternId>{PatternId::hni(16, 9)});
  CHECK((extremal_family(10, Objective::Triangles).flags & kBelowValidRange) != 0);
  CHECK(extremal_family(11, Objective::Triangles).flags == kTheoremBacked);
}

TEST_CASE("family members attain the closed forms and are P6^2-free") {
  PatternId p62 = PatternId::path_power(6, 2);
  for (int n = 6; n <= 24; ++n) {
    for (const PatternId& m : extremal_family(n, Objective::Edges).members) {
      Graph g = build(m);
      CHECK(g.edge_count() == ex_edges_p62(n).value);
      CHECK(is_free(g, p62));
    }
    for (const PatternId& m : extremal_family(n, Objective::Triangles).members) {
      Graph g = build(m);
      CHECK(triangle_count(g) == ex_triangles_p62(n).value);
      CHECK(is_free(g, p62));
    }
  }
}
