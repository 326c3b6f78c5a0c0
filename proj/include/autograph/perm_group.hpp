#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "autograph/permutation.hpp"

namespace autograph {

// Sorted list of element indices of a PermGroup.
using ElementSet = std::vector<int>;

// A finite permutation group given by generators, with every element
// materialized at construction.
//
// Elements are indexed 0..order()-1 in increasing lexicographic order of
// their image sequences, so index 0 is always the identity. All index-level
// operations (mul, inv, closure, ...) run on a precomputed multiplication
// table. Instances are immutable.
class PermGroup {
 public:
  static constexpr int kMaxOrder = 256;

  PermGroup() : PermGroup(1, {}) {}
  // Throws LimitError if the generated group has more than kMaxOrder
  // elements.
  PermGroup(int degree, std::vector<Permutation> generators,
            std::vector<std::string> generator_names = {});

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }

  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  // Index of each generator in the element list.
  const std::vector<int>& generator_indices() const { return generator_indices_; }

  const Permutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  std::span<const Permutation> elements() const { return elements_; }
  // -1 when p is not a member.
  int index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }

  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order() + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int power(int a, long long k) const;
  int conjugate(int a, int by) const { return mul(mul(inv(by), a), by); }
  int element_order(int a) const { return orders_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& element_orders() const { return orders_; }

  // Subgroup generated by the given element indices, as a sorted index list.
  ElementSet closure(std::span<const int> gens) const;
  bool is_subgroup(const ElementSet& set) const;
  bool is_normal(const ElementSet& set) const;
  // The subgroup as a PermGroup on the same points.
  PermGroup subgroup(std::span<const int> gens) const;

  bool is_abelian() const;
  bool is_cyclic() const;
  int exponent() const;
  ElementSet center() const;
  ElementSet derived_subgroup() const;

  // Shortest word in the generator names (shortlex over generator order),
  // written with exponents, e.g. "a^2b". The identity is "1".
  std::string word(int a) const;

 private:
  void build_tables();

  int degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<std::string> generator_names_;
  std::vector<int> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<std::string> words_;
};

}  // namespace autograph
