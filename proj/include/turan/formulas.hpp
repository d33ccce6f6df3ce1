#pragma once

#include <string>
#include <vector>

#include "turan/patterns.hpp"

namespace turan {

// Validity flags for closed-form values.
enum FormulaFlag : unsigned {
  kTheoremBacked = 0,
  kExcludedN = 1u << 0,      // n excluded from the theorem (n = 5 cases)
  kBelowValidRange = 1u << 1,  // formula extended below its proven range
  kOutOfRange = 1u << 2,       // argument outside any meaningful range
  kNonIntegral = 1u << 3,      // exact expression non-integral; value is its floor
};

struct FlaggedValue {
  long long value;
  unsigned flags = kTheoremBacked;
  bool theorem_backed() const { return flags == kTheoremBacked; }
};

// Edge count of the Turan graph T(n,r). Throws std::invalid_argument for r < 1 or n < 0.
long long turan_edges(int n, int r);

// f(n) = floor((n-1)/2) if n = 1,2,3 (mod 6), else ceil(n/2).
long long f_of(int n);
// g(n) = floor(n/6) + {0 for n=0,1,4; -1 for n=2,3; +1 for n=5} (mod 6).
long long g_of(int n);

FlaggedValue ex_edges_p62(int n);      // t(n,2) + f(n); n = 5 excluded
FlaggedValue ex_triangles_p62(int n);  // t(n,2) + g(n); below-range flag for n < 11
FlaggedValue ex_triangles_p52(int n);  // 4,4,5,8 for n=4..7; floor(n^2/8) for n >= 8
FlaggedValue ex_edges_tp2(int n);      // floor(n^2/4)+floor(n/2), adjusted for n = 2 (mod 4)
FlaggedValue tri_tp2_upper(int n);     // n^2/4 - 1 + [4|n]; proven for n >= 22

enum class Objective { Edges, Triangles };

struct ExtremalFamily {
  int n;
  Objective objective;
  std::vector<PatternId> members;  // H members first, then F members by ascending j
  unsigned flags = kTheoremBacked;
};

// Edge-extremal families (n >= 6) and triangle-extremal families (n >= 11).
// Below those ranges the same residue rule is applied with kBelowValidRange.
ExtremalFamily extremal_family(int n, Objective objective);

struct FormulaTableRow {
  int n;
  long long t2, f, g;
  FlaggedValue ex_edges_p62, ex_tri_p62, ex_tri_p52, ex_edges_tp2, tri_tp2_bound;
};

FormulaTableRow table_row(int n);

}  // namespace turan
