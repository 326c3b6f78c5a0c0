#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autograph/graph.hpp"
#include "autograph/group_spec.hpp"

namespace autograph {

enum class AlphaCase {
  trivial,
  cyclic_prime_power,
  cyclic_2p,
  cyclic_table1,
  quaternion,
  quaternion_times_c2,
  table1_exceptional,
  abelian_table3,
  grr_bound,
  dicyclic_construction,
  bounds_only,
};

std::string to_string(AlphaCase c);

// alpha(G): the least number of vertices of a graph whose automorphism
// group is isomorphic to G.
struct AlphaResult {
  AlphaCase tag = AlphaCase::bounds_only;
  long long order = 1;
  std::optional<long long> exact;
  long long lower = 1;
  long long upper = 0;
  std::optional<Graph> witness;
  // Set when a witness exists and has at most kMaxAutVertices vertices.
  std::optional<bool> witness_verified;
  std::string provenance;  // the rule that produced the values
};

struct AlphaOptions {
  bool build_witness = true;
  bool verify_witness = true;
};

// p prime, r >= 1. Throws ParameterError otherwise.
long long alpha_cyclic_prime_power(long long p, int r);

// Abelian groups given as a list of cyclic factor orders (any factorization;
// it is split into prime powers first).
AlphaResult alpha_abelian_bounds(const std::vector<long long>& factors);
// Throws ParameterError when spec is not abelian by construction.
AlphaResult alpha_abelian_bounds(const GroupSpec& spec);

// Full case dispatch. Groups of order above 256 are handled only when the
// spec alone determines the case; otherwise LimitError.
AlphaResult alpha(const GroupSpec& spec, const AlphaOptions& options = {});

// 2|G|. ParameterError for the cyclic groups of order 3, 4 and 5.
long long babai_upper_bound(const GroupSpec& spec);

// Exact values of the small abelian table: two factors p1^r1 <= p2^r2, or
// C2 x p2^r2 x p3^r3 with p2^r2 <= p3^r3. Keys are ascending prime powers.
struct AbelianTableCell {
  std::vector<long long> factors;
  long long alpha;
};
const std::vector<AbelianTableCell>& abelian_table();

// The seventeen exceptional values, index 1..17 in the order of table1_spec.
long long table1_alpha(int index);

}  // namespace autograph
