#include "autograph/group_theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "autograph/error.hpp"

namespace autograph {

namespace {

std::vector<int> prime_divisors(long long n) {
  std::vector<int> ps;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

int log_base(long long n, int p) {
  int k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

// max_p dim (G / G^p [G, G]), a lower bound on the generator count.
int generator_lower_bound(const PermGroup& g) {
  if (g.order() == 1) return 0;
  ElementSet derived = g.derived_subgroup();
  int best = 1;
  for (int p : prime_divisors(g.order())) {
    std::vector<int> gens(derived.begin(), derived.end());
    for (int x = 0; x < g.order(); ++x) gens.push_back(g.power(x, p));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    auto frattini_like = g.closure(gens);
    best = std::max(best, log_base(g.order() / static_cast<long long>(frattini_like.size()), p));
  }
  return best;
}

// Depth-first search for `size` generators in increasing index order,
// each outside the span of the previous ones.
bool search_generators(const PermGroup& g, std::vector<int>& chosen, int size, int min_index,
                       int skip) {
  auto span = g.closure(chosen);
  if (static_cast<int>(chosen.size()) == size) return static_cast<int>(span.size()) == g.order();
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int x : span) in[static_cast<std::size_t>(x)] = 1;
  for (int x = min_index; x < g.order(); ++x) {
    if (in[static_cast<std::size_t>(x)] || x == skip) continue;
    chosen.push_back(x);
    if (search_generators(g, chosen, size, x + 1, skip)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<int> minimal_generating_set(const PermGroup& g) {
  if (g.order() == 1) return {};
  for (int d = generator_lower_bound(g);; ++d) {
    std::vector<int> chosen;
    if (search_generators(g, chosen, d, 1, -1)) return chosen;
  }
}

std::vector<int> minimal_generating_set_with(const PermGroup& g, int first) {
  if (first <= 0 || first >= g.order()) {
    throw ParameterError("forced generator must be a non-identity element");
  }
  for (int d = std::max(1, generator_lower_bound(g));; ++d) {
    std::vector<int> chosen{first};
    if (search_generators(g, chosen, d, 1, first)) return chosen;
  }
}

std::vector<int> generators_of(const PermGroup& g, const ElementSet& set) {
  std::vector<int> gens;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  in[0] = 1;
  std::size_t covered = 1;
  for (int x : set) {
    if (covered == set.size()) break;
    if (in[static_cast<std::size_t>(x)]) continue;
    gens.push_back(x);
    auto span = g.closure(gens);
    for (int y : span) in[static_cast<std::size_t>(y)] = 1;
    covered = span.size();
  }
  return gens;
}

PermGroup subgroup_group(const PermGroup& g, const ElementSet& set) {
  auto gens = generators_of(g, set);
  return g.subgroup(gens);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Per-element class key: (order, centralizer size).
std::vector<long long> element_keys(const PermGroup& g) {
  std::vector<long long> keys(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) {
    long long c = 0;
    for (int y = 0; y < g.order(); ++y) c += (g.mul(x, y) == g.mul(y, x));
    keys[static_cast<std::size_t>(x)] = static_cast<long long>(g.element_order(x)) * 1024 + c;
  }
  return keys;
}

std::vector<long long> invariant_vector(const PermGroup& g, const std::vector<long long>& keys) {
  std::vector<long long> inv{g.order(), static_cast<long long>(g.center().size())};
  ElementSet derived = g.derived_subgroup();
  inv.push_back(static_cast<long long>(derived.size()));
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int x : derived) in[static_cast<std::size_t>(x)] = 1;
  // Orders of the elements of the abelianization (each counted |G'| times).
  std::map<int, long long> abel;
  for (int x = 0; x < g.order(); ++x) {
    int k = 1, y = x;
    while (!in[static_cast<std::size_t>(y)]) {
      y = g.mul(y, x);
      ++k;
    }
    ++abel[k];
  }
  for (auto [k, c] : abel) {
    inv.push_back(k);
    inv.push_back(c);
  }
  inv.push_back(-1);
  auto sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  inv.insert(inv.end(), sorted.begin(), sorted.end());
  return inv;
}

// Extends gens[i] -> images[i] along the Cayley graph of <gens>; fails on
// any inconsistency or loss of injectivity.
bool consistent(const PermGroup& g, const PermGroup& h, const std::vector<int>& gens,
                const std::vector<int>& images, std::vector<int>& phi) {
  phi.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> used(static_cast<std::size_t>(h.order()), 0);
  phi[0] = 0;
  used[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      int y = g.mul(x, gens[j]);
      int fy = h.mul(phi[static_cast<std::size_t>(x)], images[j]);
      int& slot = phi[static_cast<std::size_t>(y)];
      if (slot >= 0) {
        if (slot != fy) return false;
        continue;
      }
      if (used[static_cast<std::size_t>(fy)]) return false;
      slot = fy;
      used[static_cast<std::size_t>(fy)] = 1;
      queue.push_back(y);
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  auto gk = element_keys(g);
  auto hk = element_keys(h);
  if (invariant_vector(g, gk) != invariant_vector(h, hk)) return std::nullopt;
  auto gens = minimal_generating_set(g);
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int y = 0; y < h.order(); ++y) {
      if (hk[static_cast<std::size_t>(y)] == gk[static_cast<std::size_t>(gens[i])]) {
        candidates[i].push_back(y);
      }
    }
  }
  std::vector<int> images;
  std::vector<int> phi;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == gens.size()) {
      return consistent(g, h, gens, images, phi);
    }
    std::vector<int> prefix(gens.begin(), gens.begin() + static_cast<long>(i) + 1);
    for (int y : candidates[i]) {
      images.push_back(y);
      if (consistent(g, h, prefix, images, phi) && self(self, i + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  consistent(g, h, gens, images, phi);
  return phi;
}

bool is_isomorphic(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return false;
  if (g.is_abelian() && h.is_abelian()) {
    auto a = g.element_orders(), b = h.element_orders();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }
  return find_isomorphism(g, h).has_value();
}

// ---------------------------------------------------------------------------
// Quotients and abelian decompositions

QuotientAction quotient_action(const PermGroup& g, const ElementSet& n) {
  if (!g.is_normal(n)) throw ParameterError("quotient by a subgroup that is not normal");
  const int order = g.order();
  std::vector<int> coset_of(static_cast<std::size_t>(order), -1);
  std::vector<ElementSet> cosets;
  for (int x = 0; x < order; ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    ElementSet c;
    for (int m : n) c.push_back(g.mul(m, x));
    std::sort(c.begin(), c.end());
    for (int y : c) coset_of[static_cast<std::size_t>(y)] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(c));
  }
  const int k = static_cast<int>(cosets.size());
  auto action_of = [&](int x) {
    std::vector<int> images(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      images[static_cast<std::size_t>(i)] =
          coset_of[static_cast<std::size_t>(g.mul(cosets[static_cast<std::size_t>(i)][0], x))];
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (int x : g.generator_indices()) gens.push_back(action_of(x));
  QuotientAction result{PermGroup(k, std::move(gens), g.generator_names()), {}, {}};
  result.projection.resize(static_cast<std::size_t>(order));
  for (int x = 0; x < order; ++x) {
    result.projection[static_cast<std::size_t>(x)] = result.group.index_of(action_of(x));
  }
  result.cosets = std::move(cosets);
  return result;
}

namespace {

bool subset_is_abelian(const PermGroup& g, const ElementSet& a) {
  auto gens = generators_of(g, a);
  for (int x : gens) {
    for (int y : gens) {
      if (g.mul(x, y) != g.mul(y, x)) return false;
    }
  }
  return true;
}

}  // namespace

SylowHallSplit sylow_hall_split(const PermGroup& g, const ElementSet& a) {
  if (!g.is_subgroup(a) || !subset_is_abelian(g, a)) {
    throw ParameterError("Sylow/Hall split needs an abelian group");
  }
  SylowHallSplit s;
  for (int x : a) {
    int o = g.element_order(x);
    if ((o & (o - 1)) == 0) s.a2.push_back(x);
    if (o % 2 == 1) s.a2prime.push_back(x);
  }
  return s;
}

SylowHallSplit sylow_hall_split(const PermGroup& a) {
  ElementSet all(static_cast<std::size_t>(a.order()));
  std::iota(all.begin(), all.end(), 0);
  return sylow_hall_split(a, all);
}

std::vector<long long> abelian_invariants(const PermGroup& g, const ElementSet& a) {
  if (!g.is_subgroup(a) || !subset_is_abelian(g, a)) {
    throw ParameterError("abelian invariants need an abelian group");
  }
  std::vector<long long> factors;
  for (int p : prime_divisors(static_cast<long long>(a.size()))) {
    // counts[k] = #{x : x^(p^k) = 1}
    std::vector<int> logs{0};
    for (long long pk = p;; pk *= p) {
      long long count = 0;
      for (int x : a) count += (g.element_order(x) > 0 && pk % g.element_order(x) == 0);
      logs.push_back(log_base(count, p));
      if (logs.back() == logs[logs.size() - 2]) {
        logs.pop_back();
        break;
      }
    }
    // Number of factors of order >= p^k is logs[k] - logs[k-1].
    const int top = static_cast<int>(logs.size()) - 1;
    for (int k = top; k >= 1; --k) {
      int at_least_k = logs[static_cast<std::size_t>(k)] - logs[static_cast<std::size_t>(k - 1)];
      int at_least_k1 = k < top ? logs[static_cast<std::size_t>(k + 1)] - logs[static_cast<std::size_t>(k)] : 0;
      long long q = 1;
      for (int i = 0; i < k; ++i) q *= p;
      for (int i = 0; i < at_least_k - at_least_k1; ++i) factors.push_back(q);
    }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::vector<long long> abelian_invariants(const PermGroup& a) {
  ElementSet all(static_cast<std::size_t>(a.order()));
  std::iota(all.begin(), all.end(), 0);
  return abelian_invariants(a, all);
}

InvolutionSplit split_off_involution(const PermGroup& g, const ElementSet& a, int c) {
  if (std::find(a.begin(), a.end(), c) == a.end() || g.element_order(c) != 2) {
    throw ParameterError("split_off_involution: c must be an involution of the group");
  }
  for (int x : a) {
    int o = g.element_order(x);
    if (o & (o - 1)) throw ParameterError("split_off_involution: group is not a 2-group");
  }
  auto orders = abelian_invariants(g, a);
  std::reverse(orders.begin(), orders.end());

  // Cyclic decomposition: pick basis elements of the invariant orders in
  // decreasing size, each meeting the span of the previous ones trivially.
  std::vector<int> basis;
  auto rec = [&](auto&& self, std::size_t i, std::size_t span_size) -> bool {
    if (i == orders.size()) return true;
    for (int x : a) {
      if (g.element_order(x) != orders[i]) continue;
      basis.push_back(x);
      auto span = g.closure(basis);
      if (span.size() == span_size * static_cast<std::size_t>(orders[i]) &&
          self(self, i + 1, span.size())) {
        return true;
      }
      basis.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0, 1)) throw InternalError("no cyclic decomposition found");

  // Coordinates of c in the basis.
  std::vector<int> coords(basis.size(), 0);
  {
    std::vector<int> e(basis.size(), 0);
    bool found = false;
    while (!found) {
      int x = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) x = g.mul(x, g.power(basis[i], e[i]));
      if (x == c) {
        coords = e;
        found = true;
        break;
      }
      std::size_t i = 0;
      while (i < basis.size() && ++e[i] == g.element_order(basis[i])) e[i++] = 0;
      if (i == basis.size()) break;
    }
    if (!found) throw InternalError("involution not expressible in the basis");
  }

  // Involved factors in ascending order.
  std::vector<std::size_t> involved;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coords[i] != 0) involved.push_back(i);
  }
  std::stable_sort(involved.begin(), involved.end(), [&](std::size_t i, std::size_t j) {
    return g.element_order(basis[i]) < g.element_order(basis[j]);
  });
  const int r1 = g.element_order(basis[involved[0]]);
  InvolutionSplit out;
  out.y = 0;
  for (std::size_t i : involved) {
    out.y = g.mul(out.y, g.power(basis[i], g.element_order(basis[i]) / r1));
  }
  std::vector<int> rest;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i != involved[0]) rest.push_back(basis[i]);
  }
  out.complement = g.closure(rest);
  // Reorder the basis so the replaced factor comes first.
  out.basis.push_back(basis[involved[0]]);
  for (int x : rest) out.basis.push_back(x);
  return out;
}

InvolutionSplit split_off_involution(const PermGroup& a, int c) {
  ElementSet all(static_cast<std::size_t>(a.order()));
  std::iota(all.begin(), all.end(), 0);
  return split_off_involution(a, all, c);
}

std::vector<ElementSet> subgroup_class_representatives(const PermGroup& g) {
  const int n = g.order();
  std::vector<ElementSet> all;
  std::set<ElementSet> seen;
  auto add = [&](ElementSet s) {
    if (seen.insert(s).second) all.push_back(std::move(s));
  };
  add(ElementSet{0});
  std::vector<ElementSet> cyclic;
  for (int x = 0; x < n; ++x) {
    ElementSet c = g.closure(std::vector<int>{x});
    if (seen.count(c) == 0) cyclic.push_back(c);
    add(c);
  }
  // Every subgroup is a join of cyclic subgroups; close the list under joins.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : cyclic) {
      if (std::includes(all[i].begin(), all[i].end(), c.begin(), c.end())) continue;
      std::vector<int> gens = generators_of(g, all[i]);
      for (int x : generators_of(g, c)) gens.push_back(x);
      add(g.closure(gens));
    }
  }
  std::map<ElementSet, ElementSet> classes;  // smallest conjugate -> representative
  for (const auto& s : all) {
    ElementSet best = s;
    for (int x = 0; x < n; ++x) {
      ElementSet c;
      for (int e : s) c.push_back(g.conjugate(e, x));
      std::sort(c.begin(), c.end());
      best = std::min(best, c);
    }
    classes.emplace(best, best);
  }
  std::vector<ElementSet> reps;
  for (auto& [key, rep] : classes) reps.push_back(rep);
  std::stable_sort(reps.begin(), reps.end(),
                   [](const ElementSet& a, const ElementSet& b) { return a.size() > b.size(); });
  return reps;
}

std::vector<Permutation> coset_action(const PermGroup& g, const ElementSet& h) {
  if (!g.is_subgroup(h)) throw ParameterError("coset_action: not a subgroup");
  const int n = g.order();
  std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int x = 0; x < n; ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    for (int e : h) coset_of[static_cast<std::size_t>(g.mul(e, x))] = count;
    ++count;
  }
  std::vector<int> representative(static_cast<std::size_t>(count));
  for (int x = n - 1; x >= 0; --x) representative[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(x)])] = x;
  std::vector<Permutation> out;
  for (int t : g.generator_indices()) {
    std::vector<int> images(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c) {
      images[static_cast<std::size_t>(c)] =
          coset_of[static_cast<std::size_t>(g.mul(representative[static_cast<std::size_t>(c)], t))];
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

}  // namespace autograph
