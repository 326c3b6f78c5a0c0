#pragma once

#include <vector>

#include "autograph/graph.hpp"
#include "autograph/perm_group.hpp"

namespace autograph {

// Sorted element indices; identity-free and inverse-closed.
using ConnectionSet = std::vector<int>;

// Vertices are the group elements in index order; x ~ y iff y x^-1 is in s.
// Throws ParameterError if s contains the identity or is not inverse-closed.
Graph cayley_graph(const PermGroup& g, const ConnectionSet& s);

bool has_grr(const PermGroup& g);

enum class GrrStatus { found, completed_negative, budget_exhausted };

struct GrrSearchResult {
  GrrStatus status = GrrStatus::completed_negative;
  ConnectionSet connection_set;   // valid when found
  long long first_hit_index = -1;  // position in the enumeration order
  long long examined = 0;          // candidate sets whose graph was tested
};

struct GrrSearchOptions {
  long long budget = 1'000'000;  // enumeration positions tried before giving up
  int workers = 1;
};

// Searches inverse-closed connection sets, built from {x, x^-1} atoms,
// by increasing |S| and lexicographically within a size. Only sets with
// |S| <= (|G|-1)/2 are tried (a graph and its complement share their
// automorphism group), and disconnected candidates are skipped for |G| > 2.
// The result is the first hit in that order regardless of worker count.
GrrSearchResult find_grr(const PermGroup& g, const GrrSearchOptions& options = {});

std::string to_string(GrrStatus status);

}  // namespace autograph
