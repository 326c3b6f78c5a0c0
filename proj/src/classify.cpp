#include "autograph/classify.hpp"

#include <algorithm>

#include "autograph/error.hpp"
#include "autograph/group_theory.hpp"

namespace autograph {

GroupSpec table1_spec(int k) {
  switch (k) {
    case 1: return GroupSpec::cyclic(12);
    case 2: return GroupSpec::cyclic(15);
    case 3: return GroupSpec::cyclic(20);
    case 4: return GroupSpec::cyclic(21);
    case 5: return GroupSpec::abelian({2, 4});
    case 6: return GroupSpec::abelian({3, 3});
    case 7: return GroupSpec::abelian({4, 4});
    case 8: return GroupSpec::abelian({5, 5});
    case 9: return GroupSpec::abelian({2, 2, 3});
    case 10: return GroupSpec::abelian({2, 3, 3});
    case 11: return GroupSpec::dicyclic(3);
    case 12: return GroupSpec::dicyclic(5);
    case 13: return GroupSpec::dicyclic(6);
    case 14: return GroupSpec::g16();
    case 15: return GroupSpec::alternating(4);
    case 16: return GroupSpec::g16prime();
    case 17: return GroupSpec::product(GroupSpec::gen_quaternion(8), GroupSpec::cyclic(3));
    default: throw ParameterError("table1: index must be in 1..17");
  }
}

std::string table1_name(int k) {
  static const char* const names[] = {"C12",      "C15",      "C20",  "C21",  "C2xC4", "C3xC3",
                                      "C4xC4",    "C5xC5",    "C2xC2xC3", "C2xC3xC3", "Dic3",
                                      "Dic5",     "Dic6",     "G16",  "A4",   "G'16",  "Q8xC3"};
  if (k < 1 || k > 17) throw ParameterError("table1: index must be in 1..17");
  return names[k - 1];
}

std::string to_string(CyclicShape shape) {
  switch (shape) {
    case CyclicShape::prime_power: return "prime_power";
    case CyclicShape::two_p: return "two_p";
    case CyclicShape::other: return "other";
  }
  return "other";
}

namespace {

struct Catalog {
  std::vector<PermGroup> table1;
  std::vector<PermGroup> table2;
};

const Catalog& exceptional_groups() {
  static const Catalog catalog = [] {
    Catalog c;
    for (int k = 1; k <= 17; ++k) c.table1.push_back(realize(table1_spec(k)));
    for (int k = 1; k <= 13; ++k) c.table2.push_back(realize(GroupSpec::table2(k)));
    return c;
  }();
  return catalog;
}

std::optional<int> index_in(const std::vector<PermGroup>& list, const PermGroup& g) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].order() == g.order() && is_isomorphic(list[i], g)) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::optional<int> table1_index_of(const PermGroup& g) { return index_in(exceptional_groups().table1, g); }
std::optional<int> table2_index_of(const PermGroup& g) { return index_in(exceptional_groups().table2, g); }

std::optional<std::pair<ElementSet, int>> gen_dicyclic_witness(const PermGroup& g) {
  if (g.order() % 4 != 0 || g.is_abelian()) return std::nullopt;
  // Index-2 subgroups are kernels of nonzero functionals on G / G^2.
  std::vector<int> squares;
  for (int x = 0; x < g.order(); ++x) squares.push_back(g.mul(x, x));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  ElementSet sq = g.closure(squares);
  auto q = quotient_action(g, sq);
  const PermGroup& e = q.group;
  std::vector<int> basis = generators_of(e, [&] {
    ElementSet all(static_cast<std::size_t>(e.order()));
    for (int i = 0; i < e.order(); ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
  }());
  // Coordinates over F2 of each quotient element.
  std::vector<unsigned> coord(static_cast<std::size_t>(e.order()), 0);
  for (unsigned mask = 0; mask < (1u << basis.size()); ++mask) {
    int x = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (mask >> i & 1u) x = e.mul(x, basis[i]);
    }
    coord[static_cast<std::size_t>(x)] = mask;
  }
  for (unsigned f = 1; f < (1u << basis.size()); ++f) {
    ElementSet a;
    int b = -1;
    for (int x = 0; x < g.order(); ++x) {
      unsigned c = coord[static_cast<std::size_t>(q.projection[static_cast<std::size_t>(x)])];
      if (__builtin_popcount(c & f) % 2 == 0) {
        a.push_back(x);
      } else if (b < 0) {
        b = x;
      }
    }
    auto gens = generators_of(g, a);
    bool ok = true;
    for (int x : gens) {
      for (int y : gens) ok = ok && g.mul(x, y) == g.mul(y, x);
      ok = ok && g.conjugate(x, g.inv(b)) == g.inv(x);
    }
    if (!ok) continue;
    int b2 = g.mul(b, b);
    if (b2 == 0 || g.mul(b2, b2) != 0) continue;
    return std::make_pair(a, b);
  }
  return std::nullopt;
}

Classification classify(const PermGroup& g) {
  Classification c;
  c.is_abelian = g.is_abelian();
  c.exponent = g.exponent();
  c.is_cyclic = g.is_cyclic();
  if (c.is_cyclic && g.order() > 1) {
    const int n = g.order();
    int p = 2;
    while (n % p) ++p;
    int m = n, k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m == 1) {
      c.cyclic_order_shape = CyclicShape::prime_power;
      c.shape_p = p;
      c.shape_k = k;
    } else if (n % 2 == 0 && is_prime(n / 2) && n / 2 != 2) {
      c.cyclic_order_shape = CyclicShape::two_p;
      c.shape_p = n / 2;
      c.shape_k = 1;
    }
  }
  if (auto w = gen_dicyclic_witness(g)) {
    c.is_gen_dicyclic = true;
    c.dicyclic_a = w->first;
    c.dicyclic_b = w->second;
  }
  const auto& orders = g.element_orders();
  const auto involutions = std::count(orders.begin(), orders.end(), 2);
  c.is_gen_quaternion = g.order() >= 8 && is_power_of_two(g.order()) && !c.is_cyclic && involutions == 1;
  if (g.order() >= 16 && is_power_of_two(g.order()) && involutions == 3 && !c.is_abelian) {
    auto target = realize(GroupSpec::product(GroupSpec::gen_quaternion(g.order() / 2), GroupSpec::cyclic(2)));
    c.is_q2r_times_c2 = is_isomorphic(g, target);
  }
  c.table1_index = table1_index_of(g);
  c.table2_index = table2_index_of(g);
  c.has_grr = !(c.is_abelian && c.exponent > 2) && !c.is_gen_dicyclic && !c.table2_index;
  return c;
}

}  // namespace autograph
