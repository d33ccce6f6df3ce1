#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

using Edge = std::pair<int, int>;  // first < second

// Raised when a structural claim the machinery relies on fails to verify;
// carries diagnostics distinguishing hypothesis violations from genuine
// falsifications.
struct ClaimViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A block: connected component of triangles under the share-an-edge relation.
struct Block {
  std::vector<int> vertices;        // ascending
  std::vector<Triangle> triangles;  // ascending
  std::vector<Edge> edges;          // union of triangle edges, ascending
};

struct BlockDecomposition {
  std::vector<Block> blocks;           // ordered by smallest triangle
  std::vector<Edge> unassigned_edges;  // edges lying in no triangle
};

enum class BlockKindTag { K5Minus, K4, Pyramid, Suspension };

struct BlockKind {
  BlockKindTag tag;
  std::array<int, 3> core{-1, -1, -1};  // K5Minus / Pyramid: verified core triangle
  std::vector<Edge> red_edges;          // designated red edges for this block
  int apex = -1;                        // Suspension only
};

std::string to_string(BlockKindTag t);

// Deletes every edge of type 0 (in no triangle).
Graph normalize(const Graph& g);

BlockDecomposition decompose(const Graph& g);

// Classifies one block, verifying the structural witness against the host
// graph rather than trusting any claim. Priority: K5Minus > K4 > Pyramid >
// Suspension. Throws ClaimViolation when no witness verifies; the message
// reports whether the hypotheses (P6^2-freeness, K_5-freeness) hold.
BlockKind classify(const Graph& g, const Block& b);

// Growing process: closure of the seed edges under "add any triangle sharing
// an edge". Throws std::invalid_argument when the seed is empty, contains a
// non-edge, contains an edge in no triangle, or spans several blocks.
Block grow(const Graph& g, std::span<const Edge> seed);

struct BlockColoring {
  BlockKindTag kind;
  std::vector<Edge> red, blue;
};

struct Coloring {
  std::vector<BlockColoring> per_block;  // aligned with decomposition order
  std::vector<Edge> red, blue;           // global unions
};

Coloring color(const Graph& g, const BlockDecomposition& d, const std::vector<BlockKind>& kinds);

// Full red/blue audit: decompose, classify, color, then check every
// inequality of the counting argument. Violations are reported, not thrown —
// this is the falsification channel. Throws std::invalid_argument only when
// the hypotheses (P6^2-free and K_5-free) fail.
struct AuditReport {
  long long t = 0;        // triangles in g
  long long e = 0;        // edges in g
  long long e_b = 0, e_r = 0;
  long long B = 0;        // number of K5Minus blocks
  bool tri_le_blue_plus_B = false;   // t(G) <= e_b + B
  bool er_ge_3B = false;             // e_r >= 3B
  bool eb_le_turan = false;          // e_b <= t(n,2)
  bool edges_le_ex = false;          // e(G) <= t(n,2) + f(n); vacuous at n = 5
  bool edges_le_ex_applicable = true;
  bool per_block_bound = false;     // each block: t <= blue (+1 for K5Minus)
  bool blue_triangle_free = false;
  std::vector<std::string> violations;
  std::vector<BlockKindTag> kinds;
  bool ok() const { return violations.empty(); }
};

AuditReport audit(const Graph& g);

}  // namespace turan
