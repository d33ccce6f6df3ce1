#include "turan/discharging.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "turan/patterns.hpp"

namespace turan {

TriangleType triangle_type(const Graph& g, const Triangle& t) {
  TriangleType tt = {edge_type(g, t.a, t.b), edge_type(g, t.a, t.c), edge_type(g, t.b, t.c)};
  std::sort(tt.begin(), tt.end());
  return tt;
}

namespace {

// Each triangle starts with charge 0 and must end with >= 1; each edge sends
// out at most 1 in total. Amounts are exact twelfths.
//
//   Rule 1: an edge lying in i triangles, 1 <= i <= 3, sends 1/i to each.
//   Rule 2: an edge lying in >= 4 triangles sends, per triangle, an amount
//           keyed by the multiset of the OTHER two edge types {a, b}:
//             {1,*} and {2,2}      -> 0
//             {2,3}                -> 1/6
//             {2,4+}               -> 1/4
//             {3,3}, {3,4+}, {4+,4+} -> 1/3
int rule2_twelfths(EdgeType x, EdgeType y) {
  int a = std::min(static_cast<int>(x), static_cast<int>(y));
  int b = std::max(static_cast<int>(x), static_cast<int>(y));
  if (a <= 1) return 0;
  if (a == 2) {
    if (b == 2) return 0;
    if (b == 3) return 2;
    return 3;  // {2,4+}
  }
  return 4;  // {3,3}, {3,4+}, {4+,4+}
}

int edge_index_of(const std::vector<Edge>& edges, int u, int v) {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  return static_cast<int>(it - edges.begin());
}

}  // namespace

ChargeLedger assign_charges(const Graph& g) {
  ChargeLedger led;
  for (auto [u, v] : g.edges())
    if (triangles_on_edge(g, u, v) > 0) led.edges.push_back({u, v});
  led.triangles = triangle_list(g);
  led.edge_out.assign(led.edges.size(), 0);
  led.tri_in.assign(led.triangles.size(), 0);

  for (int ti = 0; ti < static_cast<int>(led.triangles.size()); ++ti) {
    const Triangle& t = led.triangles[ti];
    const std::array<std::pair<int, int>, 3> tri_edges = {
        std::pair{t.a, t.b}, std::pair{t.a, t.c}, std::pair{t.b, t.c}};
    std::array<EdgeType, 3> types;
    for (int k = 0; k < 3; ++k) types[k] = edge_type(g, tri_edges[k].first, tri_edges[k].second);
    for (int k = 0; k < 3; ++k) {
      int tw;
      if (types[k] == EdgeType::FourPlus)
        tw = rule2_twelfths(types[(k + 1) % 3], types[(k + 2) % 3]);
      else
        tw = 12 / static_cast<int>(types[k]);
      int ei = edge_index_of(led.edges, tri_edges[k].first, tri_edges[k].second);
      led.flows.push_back({led.edges[ei], t, tw});
      led.edge_out[ei] += tw;
      led.tri_in[ti] += tw;
    }
  }
  return led;
}

DischargeReport verify_discharge(const Graph& g) {
  if (auto hit = contains(g, build(PatternId::path_power(6, 2)))) {
    std::ostringstream os;
    os << "graph contains P6^2 on vertices [";
    for (std::size_t i = 0; i < hit->size(); ++i) os << (i ? "," : "") << (*hit)[i];
    os << "]";
    throw HypothesisViolation(os.str());
  }
  ChargeLedger led = assign_charges(g);
  DischargeReport rep;
  rep.t = static_cast<long long>(led.triangles.size());
  rep.e = g.edge_count();
  rep.e_normalized = static_cast<long long>(led.edges.size());
  long long total_out = 0, total_in = 0;
  for (std::size_t i = 0; i < led.edge_out.size(); ++i) {
    total_out += led.edge_out[i];
    if (led.edge_out[i] > rep.max_edge_out) {
      rep.max_edge_out = led.edge_out[i];
      rep.worst_edge = led.edges[i];
    }
  }
  if (!led.tri_in.empty()) {
    rep.min_tri_in = led.tri_in[0];
    rep.worst_triangle = led.triangles[0];
  }
  for (std::size_t i = 0; i < led.tri_in.size(); ++i) {
    total_in += led.tri_in[i];
    if (led.tri_in[i] < rep.min_tri_in) {
      rep.min_tri_in = led.tri_in[i];
      rep.worst_triangle = led.triangles[i];
    }
  }
  rep.inflow_ok = rep.min_tri_in >= 12;
  rep.outflow_ok = rep.max_edge_out <= 12;
  rep.conservation_ok = total_in == total_out;
  rep.certified = rep.inflow_ok && rep.outflow_ok && rep.conservation_ok && rep.t <= rep.e;
  return rep;
}

std::vector<DiamondViolation> diamond_claim_check(const Graph& g) {
  // Two triangles xyz, xyw on a shared edge xy: if yz has type 4+ then xw
  // must have type 1 or 2. Both orientations of the shared edge count.
  std::vector<DiamondViolation> out;
  for (auto [p, q] : g.edges()) {
    std::uint64_t common = g.adj[p] & g.adj[q];
    for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
      std::uint64_t zs = common;
      while (zs) {
        int z = std::countr_zero(zs);
        zs &= zs - 1;
        if (edge_type(g, y, z) != EdgeType::FourPlus) continue;
        std::uint64_t ws = common & ~(std::uint64_t{1} << z);
        while (ws) {
          int w = std::countr_zero(ws);
          ws &= ws - 1;
          EdgeType xw = edge_type(g, x, w);
          if (xw != EdgeType::One && xw != EdgeType::Two)
            out.push_back({x, y, z, w, EdgeType::FourPlus, xw});
        }
      }
    }
  }
  return out;
}

std::string charge_to_string(int twelfths) {
  if (twelfths == 0) return "0";
  int gcd = std::gcd(twelfths, 12);
  int num = twelfths / gcd, den = 12 / gcd;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace turan
