#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace autograph {

// A bijection on {0, ..., n-1}, stored as its image sequence.
//
// Composition follows the right-action convention: `(p * q)(i) == q(p(i))`,
// i.e. p is applied first. With this convention the map from a word in
// generators to the product of their permutations is a homomorphism for the
// right regular and coset actions produced by the group catalog.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // Builds a permutation from 0-based cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Smallest k >= 1 with p^k = identity.
  long long order() const;
  // Points moved by the permutation.
  int support_size() const;

  // Cycle notation with the given offset added to every point (1 for the
  // usual 1-based display); the identity prints as "()".
  std::string to_cycle_string(int offset = 0) const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace autograph
