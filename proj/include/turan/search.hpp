#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/patterns.hpp"

namespace turan {

enum class SearchMode { Exact, LowerBoundOnly };
enum class Completeness { Proven, Budgeted };

struct SearchBudget {
  long long max_nodes = 0;  // candidate children examined; 0 = unlimited
  double max_seconds = 0;   // 0 = unlimited
};

struct SearchSpec {
  int n = 0;
  PatternId forbidden;
  Objective objective = Objective::Edges;
  SearchMode mode = SearchMode::Exact;
  SearchBudget budget;
  int jobs = 1;
};

struct SearchReport {
  int n = 0;
  std::string pattern;
  Objective objective = Objective::Edges;
  long long optimum = 0;
  std::vector<std::string> extremal;  // canonical graph6, sorted
  long long nodes_explored = 0;
  double wall_time_s = 0;
  Completeness completeness = Completeness::Proven;
};

// Exhaustive maximum of the objective over forbidden-pattern-free graphs on
// spec.n vertices, by vertex-by-vertex canonical augmentation with hereditary
// pruning and a complete-completion objective bound. Proven when the tree was
// exhausted within budget. LowerBoundOnly samples constructions and random
// maximal free graphs instead of searching; always Budgeted.
SearchReport exhaustive_max(const SearchSpec& spec);

// Visits every F-free graph on 1..n vertices exactly once up to isomorphism
// (the full canonical-augmentation tree, no objective pruning). Returns false
// if the node budget was exhausted before completion.
bool enumerate_free(int n, const PatternId& forbidden,
                    const std::function<void(const Graph&)>& visit,
                    long long max_nodes = 0);

// All triangle-free graphs on n vertices with at least min_edges edges, up to
// isomorphism, as sorted canonical graph6 strings. Exact for n <= 14.
std::vector<std::string> near_turan_triangle_free(int n, long long min_edges);

// Random maximal F-free graph: shuffle all vertex pairs with a splitmix-fed
// Fisher-Yates (deterministic per seed across platforms), insert each edge iff
// the graph stays F-free.
Graph random_free_graph(int n, const PatternId& forbidden, std::uint64_t seed);

enum class TheoremId { ExEdgesP62, ExTriP62, ExTriP52, ExEdgesTP2 };
// Budgeted: the oracle hit its budget without contradicting the formula.
enum class Verdict { Verified, Failed, Excluded, OutsideScope, Budgeted };

struct TheoremVerdict {
  int n = 0;
  Verdict verdict = Verdict::OutsideScope;
  long long oracle = 0;
  long long formula = 0;
  std::vector<std::string> extremal;        // oracle's canonical graph6 list
  std::vector<std::string> family_names;    // matched construction names
  bool family_checked = false;
  bool family_matches = false;
  std::string detail;
};

struct VerifyOptions {
  SearchBudget budget;
  int jobs = 1;
  bool no_cache = true;
  std::string cache_dir = "results";
};

std::vector<TheoremVerdict> verify_theorem(TheoremId id, int from, int to,
                                           const VerifyOptions& opts = {});

// Proven-report cache: <dir>/<pattern>/<objective>.json holds one report per n.
std::optional<SearchReport> cache_lookup(const std::string& dir, const PatternId& pattern,
                                         Objective objective, int n);
void cache_store(const std::string& dir, const PatternId& pattern, const SearchReport& report);

const char* to_string(Objective o);
const char* to_string(Completeness c);
const char* to_string(Verdict v);

}  // namespace turan
