#include "turan/formulas.hpp"

#include <stdexcept>

namespace turan {

long long turan_edges(int n, int r) {
  if (n < 0) throw std::invalid_argument("turan_edges: n < 0");
  if (r < 1) throw std::invalid_argument("turan_edges: r < 1");
  long long total = static_cast<long long>(n) * (n - 1) / 2;
  long long q = n / r, rem = n % r;
  long long inside = rem * (q + 1) * q / 2 + (r - rem) * q * (q - 1) / 2;
  return total - inside;
}

long long f_of(int n) {
  if (n < 0) throw std::invalid_argument("f_of: n < 0");
  int r = n % 6;
  if (r == 1 || r == 2 || r == 3) return (n - 1) / 2;
  return (n + 1) / 2;  // ceil(n/2)
}

long long g_of(int n) {
  if (n < 0) throw std::invalid_argument("g_of: n < 0");
  long long base = n / 6;
  switch (n % 6) {
    case 2:
    case 3: return base - 1;
    case 5: return base + 1;
    default: return base;  // 0, 1, 4
  }
}

FlaggedValue ex_edges_p62(int n) {
  if (n < 0) throw std::invalid_argument("ex_edges_p62: n < 0");
  FlaggedValue v{turan_edges(n, 2) + f_of(n), kTheoremBacked};
  if (n == 5) v.flags |= kExcludedN;   // true value is 10 = e(K5); formula gives 9
  if (n < 6) v.flags |= kBelowValidRange;
  return v;
}

FlaggedValue ex_triangles_p62(int n) {
  if (n < 0) throw std::invalid_argument("ex_triangles_p62: n < 0");
  FlaggedValue v{turan_edges(n, 2) + g_of(n), kTheoremBacked};
  if (n < 11) v.flags |= kBelowValidRange;
  return v;
}

FlaggedValue ex_triangles_p52(int n) {
  if (n < 0) throw std::invalid_argument("ex_triangles_p52: n < 0");
  if (n < 4) return {0, kOutOfRange};
  switch (n) {
    case 4: return {4, kTheoremBacked};
    case 5: return {4, kTheoremBacked};
    case 6: return {5, kTheoremBacked};
    case 7: return {8, kTheoremBacked};
    default: return {static_cast<long long>(n) * n / 8, kTheoremBacked};
  }
}

FlaggedValue ex_edges_tp2(int n) {
  if (n < 0) throw std::invalid_argument("ex_edges_tp2: n < 0");
  long long nn = static_cast<long long>(n);
  long long value;
  if (n % 4 == 2)
    value = nn * nn / 4 + nn / 2 - 1;
  else
    value = nn * nn / 4 + nn / 2;
  FlaggedValue v{value, kTheoremBacked};
  if (n == 5) v.flags |= kExcludedN;  // true value is 10 = e(K5)
  if (n < 6) v.flags |= kBelowValidRange;
  return v;
}

FlaggedValue tri_tp2_upper(int n) {
  if (n < 0) throw std::invalid_argument("tri_tp2_upper: n < 0");
  long long nn = static_cast<long long>(n);
  FlaggedValue v{nn * nn / 4 - 1 + (n % 4 == 0 ? 1 : 0), kTheoremBacked};
  if (n % 2 != 0) v.flags |= kNonIntegral;  // bound stated for even n; floor reported
  if (n < 22) v.flags |= kBelowValidRange;
  return v;
}

ExtremalFamily extremal_family(int n, Objective objective) {
  if (n < 0) throw std::invalid_argument("extremal_family: n < 0");
  if (n > kMaxN) throw std::invalid_argument("extremal_family: n > 64");
  ExtremalFamily fam;
  fam.n = n;
  fam.objective = objective;
  fam.flags = kTheoremBacked;
  int r = n % 6;
  if (objective == Objective::Edges) {
    if (n < 6) fam.flags |= kBelowValidRange;
    if (n == 5) fam.flags |= kExcludedN;
    auto add_h = [&](int i) { fam.members.push_back(PatternId::hni(n, i)); };
    auto add_f_range = [&](int i) {
      for (int j = i % 3; j <= i; j += 3) fam.members.push_back(PatternId::fnij(n, i, j));
    };
    switch (r) {
      case 0:
        add_h(n / 2);
        break;
      case 1:
        add_h((n - 1) / 2);
        add_f_range((n + 1) / 2);
        break;
      case 2:
        add_f_range(n / 2);
        add_f_range(n / 2 + 1);
        break;
      case 3:
        add_h((n + 1) / 2 + 1);
        add_f_range((n + 1) / 2);
        break;
      case 4:
        add_h(n / 2 + 1);
        break;
      case 5:
        add_h((n + 1) / 2);
        break;
    }
  } else {
    if (n < 11) fam.flags |= kBelowValidRange;
    int i;
    switch (r) {
      case 0: i = n / 2; break;
      case 1: i = (n - 1) / 2; break;
      case 2: i = n / 2 - 1; break;
      case 3: i = (n + 1) / 2 + 1; break;
      case 4: i = n / 2 + 1; break;
      default: i = (n + 1) / 2; break;  // r == 5
    }
    if (i >= 0 && i <= n && i % 3 == 0) fam.members.push_back(PatternId::hni(n, i));
  }
  return fam;
}

FormulaTableRow table_row(int n) {
  FormulaTableRow row;
  row.n = n;
  row.t2 = turan_edges(n, 2);
  row.f = f_of(n);
  row.g = g_of(n);
  row.ex_edges_p62 = ex_edges_p62(n);
  row.ex_tri_p62 = ex_triangles_p62(n);
  row.ex_tri_p52 = ex_triangles_p52(n);
  row.ex_edges_tp2 = ex_edges_tp2(n);
  row.tri_tp2_bound = tri_tp2_upper(n);
  return row;
}

}  // namespace turan
