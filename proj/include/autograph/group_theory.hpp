#pragma once

#include <optional>
#include <vector>

#include "autograph/perm_group.hpp"

namespace autograph {

// A minimum-size generating set, lexicographically least in element index
// order. The trivial group gives the empty set.
std::vector<int> minimal_generating_set(const PermGroup& g);
// A smallest generating set that starts with `first`; the remaining
// elements are lexicographically least.
std::vector<int> minimal_generating_set_with(const PermGroup& g, int first);

// Greedy generating set of the subgroup `set` of g (elements in index order
// that are not yet in the span).
std::vector<int> generators_of(const PermGroup& g, const ElementSet& set);
// The subgroup as its own PermGroup on the points of g.
PermGroup subgroup_group(const PermGroup& g, const ElementSet& set);

// Isomorphism g -> h as an element index map, if one exists.
std::optional<std::vector<int>> find_isomorphism(const PermGroup& g, const PermGroup& h);
bool is_isomorphic(const PermGroup& g, const PermGroup& h);

struct QuotientAction {
  PermGroup group;             // action on the cosets of n, degree [g:n]
  std::vector<int> projection;  // element of g -> element of the quotient
  std::vector<ElementSet> cosets;
};
// Throws ParameterError if n is not a normal subgroup.
QuotientAction quotient_action(const PermGroup& g, const ElementSet& n);

struct SylowHallSplit {
  ElementSet a2;       // elements of 2-power order
  ElementSet a2prime;  // elements of odd order
};
// Splits an abelian group (or abelian subgroup `a` of g) into its Sylow
// 2-subgroup and Hall 2'-subgroup. Throws ParameterError on non-abelian input.
SylowHallSplit sylow_hall_split(const PermGroup& g, const ElementSet& a);
SylowHallSplit sylow_hall_split(const PermGroup& a);

struct InvolutionSplit {
  int y = 0;              // c lies in <y>
  ElementSet complement;  // a = <y> (+) complement
  ElementSet basis;       // the cyclic decomposition used
};
// For an abelian 2-group a (or subgroup `a` of g) and an involution c of it,
// picks a cyclic decomposition a = <a1> + ... + <an> with c supported on
// a1..as (ascending orders 2^r1 <= ... ), and sets
// y = a1 * a2^(2^(r2-r1)) * ... * as^(2^(rs-r1)); the complement is the
// span of a2..an.
InvolutionSplit split_off_involution(const PermGroup& g, const ElementSet& a, int c);
InvolutionSplit split_off_involution(const PermGroup& a, int c);

// Orders of a cyclic decomposition of the abelian subgroup `a`, ascending
// prime-power factors.
std::vector<long long> abelian_invariants(const PermGroup& g, const ElementSet& a);
std::vector<long long> abelian_invariants(const PermGroup& a);

// One subgroup from each conjugacy class, ordered by increasing index and
// then by element list.
std::vector<ElementSet> subgroup_class_representatives(const PermGroup& g);

// Right-multiplication action of g on the right cosets of h: one
// permutation per generator of g, on [g:h] points numbered by the smallest
// element of each coset.
std::vector<Permutation> coset_action(const PermGroup& g, const ElementSet& h);

}  // namespace autograph
