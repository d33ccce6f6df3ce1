#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "turan/blocks.hpp"
#include "turan/graph.hpp"

namespace turan {

struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ascending triple of edge types of a triangle's three edges.
using TriangleType = std::array<EdgeType, 3>;

TriangleType triangle_type(const Graph& g, const Triangle& t);

// All charges are exact multiples of 1/12: {0, 1/6, 1/4, 1/3, 1/2, 1}.
struct ChargeFlow {
  Edge edge;
  Triangle tri;
  int twelfths;
};

struct ChargeLedger {
  std::vector<Edge> edges;             // edges of the normalized graph
  std::vector<Triangle> triangles;
  std::vector<ChargeFlow> flows;
  std::vector<int> edge_out;  // aligned with edges, twelfths
  std::vector<int> tri_in;    // aligned with triangles, twelfths
};

// Discharging rules. Edges of type 1..3 give 1/type to each containing
// triangle. A 4+ edge gives, per triangle, an amount keyed by the ascending
// pair of the other two edges' types:
//   (1,1) (1,2) (1,3) (1,4+) (2,2) -> 0
//   (2,3) -> 1/6   (2,4+) -> 1/4   (3,3) -> 1/3   (3,4+) -> 1/3   (4+,4+) -> 1/3
// Type-0 edges participate in nothing; run normalize first.
ChargeLedger assign_charges(const Graph& g);

struct DischargeReport {
  long long t = 0, e = 0, e_normalized = 0;
  int min_tri_in = 12;   // twelfths; 12 when there are no triangles
  int max_edge_out = 0;  // twelfths
  bool inflow_ok = true;     // every triangle receives >= 1
  bool outflow_ok = true;    // every edge emits <= 1
  bool conservation_ok = true;
  bool certified = false;    // all checks passed => t(g) <= e(g) certified
  std::optional<Edge> worst_edge;
  std::optional<Triangle> worst_triangle;
};

// Refuses inputs containing P6^2 (throws HypothesisViolation).
DischargeReport verify_discharge(const Graph& g);

// Diamond shape: triangles xyz, xyw sharing xy with yz of type 4+ force
// xw to have type 1 or 2. Returns every violating quadruple.
struct DiamondViolation {
  int x, y, z, w;
  EdgeType yz_type, xw_type;
};

std::vector<DiamondViolation> diamond_claim_check(const Graph& g);

std::string charge_to_string(int twelfths);  // reduced "p/q" or "0"/"1"

}  // namespace turan
