#pragma once

#include <vector>

#include "autograph/graph.hpp"
#include "autograph/group_spec.hpp"
#include "autograph/permutation.hpp"

namespace autograph {

struct AutResult {
  std::vector<Permutation> generators;
  BigInt order = 1;
  // Orbits of the group, each sorted, ordered by smallest vertex.
  std::vector<std::vector<int>> orbits;
  // Set when the search stopped early because the order exceeded the
  // requested bound; `order` is then only a lower bound.
  bool order_exceeded = false;
};

struct AutOptions {
  // Optional vertex colors; automorphisms must preserve them.
  std::vector<int> colors;
  // Stop as soon as |Aut| is known to exceed this bound (0: no bound).
  BigInt max_order = 0;
};

struct CanonicalResult {
  AutResult aut;
  // labeling(v) is the position of vertex v in the canonical order.
  Permutation labeling;
  Graph form;
};

constexpr int kMaxAutVertices = 64;

// Automorphism group by equitable refinement and backtracking over target
// cells with orbit pruning. Throws LimitError above kMaxAutVertices.
AutResult automorphisms(const Graph& g, const AutOptions& options = {});
// Canonical labeling: the lexicographically least relabeled adjacency over
// the leaves of the search tree.
CanonicalResult canonical_labeling(const Graph& g, const std::vector<int>& colors = {});
Graph canonical_form(const Graph& g);

// Independent oracle for n <= 8: tries every bijection (with partial
// adjacency checks). Generators are all non-identity automorphisms.
AutResult automorphisms_bruteforce(const Graph& g);

// All elements of the group generated by the given permutations, sorted.
std::vector<Permutation> generated_elements(const std::vector<Permutation>& generators, int degree);

}  // namespace autograph
