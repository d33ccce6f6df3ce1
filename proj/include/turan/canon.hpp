#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

using Perm = std::array<std::uint8_t, kMaxN>;  // perm[v] = image of v

struct CanonicalForm {
  Graph graph;  // canonically relabeled copy of the input
  Perm lab;     // lab[i] = original vertex placed at canonical position i
  Perm orbit;   // orbit[v] = smallest vertex in v's automorphism orbit
  std::vector<Perm> generators;  // discovered automorphisms (original labels)
};

// Individualization-refinement canonical labeling with automorphism pruning.
// Isomorphism-invariant: isomorphic graphs yield identical .graph.
CanonicalForm canonical_form(const Graph& g);

std::string canonical_graph6(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace turan
