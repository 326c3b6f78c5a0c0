#pragma once

#include <optional>
#include <string>

#include "autograph/group_spec.hpp"
#include "autograph/perm_group.hpp"

namespace autograph {

enum class CyclicShape { prime_power, two_p, other };

struct Classification {
  bool is_abelian = false;
  int exponent = 1;
  bool is_cyclic = false;
  // For cyclic groups of order p^k or 2p (p odd prime); `other` otherwise.
  CyclicShape cyclic_order_shape = CyclicShape::other;
  int shape_p = 0;
  int shape_k = 0;
  bool is_gen_dicyclic = false;
  ElementSet dicyclic_a;  // abelian subgroup of index 2 inverted by b
  int dicyclic_b = -1;
  bool is_gen_quaternion = false;
  bool is_q2r_times_c2 = false;
  std::optional<int> table1_index;
  std::optional<int> table2_index;
  bool has_grr = false;
};

Classification classify(const PermGroup& g);

// Generalized dicyclic witnesses (A, b), if g is generalized dicyclic.
std::optional<std::pair<ElementSet, int>> gen_dicyclic_witness(const PermGroup& g);

// The seventeen groups whose value is given directly by the exceptional
// list, index 1..17.
GroupSpec table1_spec(int index);
std::string table1_name(int index);

// Index in the exceptional lists (1-based) of a group isomorphic to g.
std::optional<int> table1_index_of(const PermGroup& g);
std::optional<int> table2_index_of(const PermGroup& g);

std::string to_string(CyclicShape shape);

}  // namespace autograph
