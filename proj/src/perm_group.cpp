#include "autograph/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "autograph/error.hpp"

namespace autograph {

namespace {

std::string default_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "g" + std::to_string(i + 1);
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     std::vector<std::string> generator_names)
    : degree_(degree), generators_(std::move(generators)),
      generator_names_(std::move(generator_names)) {
  if (degree < 1) throw ParameterError("permutation group degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree) throw ParameterError("generator degree mismatch");
  }
  if (generator_names_.empty()) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      generator_names_.push_back(default_name(i));
    }
  }
  if (generator_names_.size() != generators_.size()) {
    throw ParameterError("generator name count mismatch");
  }
  build_tables();
}

void PermGroup::build_tables() {
  const std::size_t d = generators_.size();
  // Breadth-first closure; bfs_perm[k] is the k-th discovered element.
  std::vector<Permutation> bfs_perm{Permutation::identity(degree_)};
  std::vector<int> bfs_parent{-1};
  std::vector<int> bfs_gen{-1};
  std::unordered_map<Permutation, int, PermutationHash> bfs_index{{bfs_perm[0], 0}};
  std::vector<int> bfs_mulgen;  // bfs_mulgen[k * d + g] = bfs index of x_k * g
  for (std::size_t k = 0; k < bfs_perm.size(); ++k) {
    for (std::size_t g = 0; g < d; ++g) {
      Permutation next = bfs_perm[k] * generators_[g];
      auto it = bfs_index.find(next);
      int idx;
      if (it == bfs_index.end()) {
        if (static_cast<int>(bfs_perm.size()) >= kMaxOrder) {
          throw LimitError("group order exceeds the supported limit of " +
                           std::to_string(kMaxOrder));
        }
        idx = static_cast<int>(bfs_perm.size());
        bfs_index.emplace(next, idx);
        bfs_perm.push_back(std::move(next));
        bfs_parent.push_back(static_cast<int>(k));
        bfs_gen.push_back(static_cast<int>(g));
      } else {
        idx = it->second;
      }
      bfs_mulgen.push_back(idx);
    }
  }

  const int n = static_cast<int>(bfs_perm.size());
  std::vector<int> sorted_order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sorted_order[static_cast<std::size_t>(i)] = i;
  std::sort(sorted_order.begin(), sorted_order.end(), [&](int a, int b) {
    return bfs_perm[static_cast<std::size_t>(a)] < bfs_perm[static_cast<std::size_t>(b)];
  });
  std::vector<int> to_sorted(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    to_sorted[static_cast<std::size_t>(sorted_order[static_cast<std::size_t>(i)])] = i;
  }

  elements_.clear();
  elements_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    elements_.push_back(bfs_perm[static_cast<std::size_t>(sorted_order[static_cast<std::size_t>(i)])]);
  }
  index_.clear();
  for (int i = 0; i < n; ++i) index_.emplace(elements_[static_cast<std::size_t>(i)], i);

  auto mulgen = [&](int sorted_idx, std::size_t g) {
    int b = sorted_order[static_cast<std::size_t>(sorted_idx)];
    return to_sorted[static_cast<std::size_t>(bfs_mulgen[static_cast<std::size_t>(b) * d + g])];
  };

  table_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    auto row = static_cast<std::size_t>(i) * static_cast<std::size_t>(n);
    // BFS order guarantees the parent column is filled before the child.
    for (int k = 0; k < n; ++k) {
      int j = to_sorted[static_cast<std::size_t>(k)];
      if (k == 0) {
        table_[row + static_cast<std::size_t>(j)] = i;
        continue;
      }
      int parent = to_sorted[static_cast<std::size_t>(bfs_parent[static_cast<std::size_t>(k)])];
      int via = table_[row + static_cast<std::size_t>(parent)];
      table_[row + static_cast<std::size_t>(j)] =
          mulgen(via, static_cast<std::size_t>(bfs_gen[static_cast<std::size_t>(k)]));
    }
  }

  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mul(i, j) == 0) {
        inverse_[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
  }
  orders_.assign(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) {
    int x = i, k = 1;
    while (x != 0) {
      x = mul(x, i);
      ++k;
    }
    orders_[static_cast<std::size_t>(i)] = k;
  }

  generator_indices_.clear();
  for (const auto& g : generators_) generator_indices_.push_back(index_of(g));

  // Shortlex words: breadth-first over generators in order.
  std::vector<std::vector<int>> letters(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < d; ++g) {
      int y = mul(x, generator_indices_[g]);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      letters[static_cast<std::size_t>(y)] = letters[static_cast<std::size_t>(x)];
      letters[static_cast<std::size_t>(y)].push_back(static_cast<int>(g));
      queue.push_back(y);
    }
  }
  bool single_char = std::all_of(generator_names_.begin(), generator_names_.end(),
                                 [](const std::string& s) { return s.size() == 1; });
  words_.assign(static_cast<std::size_t>(n), "1");
  for (int i = 1; i < n; ++i) {
    const auto& w = letters[static_cast<std::size_t>(i)];
    std::string out;
    for (std::size_t p = 0; p < w.size();) {
      std::size_t q = p;
      while (q < w.size() && w[q] == w[p]) ++q;
      if (!out.empty() && !single_char) out += '*';
      out += generator_names_[static_cast<std::size_t>(w[p])];
      if (q - p > 1) out += "^" + std::to_string(q - p);
      p = q;
    }
    words_[static_cast<std::size_t>(i)] = out;
  }
}

int PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::power(int a, long long k) const {
  long long m = element_order(a);
  k %= m;
  if (k < 0) k += m;
  int result = 0;
  for (long long i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

ElementSet PermGroup::closure(std::span<const int> gens) const {
  std::vector<char> in(static_cast<std::size_t>(order()), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (int g : gens) {
      int y = mul(members[k], g);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool PermGroup::is_subgroup(const ElementSet& set) const {
  if (set.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(order()), 0);
  for (int x : set) in[static_cast<std::size_t>(x)] = 1;
  if (!in[0]) return false;
  for (int x : set) {
    for (int y : set) {
      if (!in[static_cast<std::size_t>(mul(x, y))]) return false;
    }
  }
  return true;
}

bool PermGroup::is_normal(const ElementSet& set) const {
  if (!is_subgroup(set)) return false;
  std::vector<char> in(static_cast<std::size_t>(order()), 0);
  for (int x : set) in[static_cast<std::size_t>(x)] = 1;
  for (int g : generator_indices_) {
    for (int x : set) {
      if (!in[static_cast<std::size_t>(conjugate(x, g))]) return false;
    }
  }
  return true;
}

PermGroup PermGroup::subgroup(std::span<const int> gens) const {
  std::vector<Permutation> perms;
  for (int g : gens) perms.push_back(element(g));
  return PermGroup(degree_, std::move(perms));
}

bool PermGroup::is_abelian() const {
  for (int a : generator_indices_) {
    for (int b : generator_indices_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool PermGroup::is_cyclic() const {
  return std::any_of(orders_.begin(), orders_.end(), [&](int o) { return o == order(); });
}

int PermGroup::exponent() const {
  long long e = 1;
  for (int o : orders_) e = std::lcm(e, static_cast<long long>(o));
  return static_cast<int>(e);
}

ElementSet PermGroup::center() const {
  ElementSet z;
  for (int x = 0; x < order(); ++x) {
    bool central = true;
    for (int g : generator_indices_) {
      if (mul(x, g) != mul(g, x)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return z;
}

ElementSet PermGroup::derived_subgroup() const {
  std::vector<int> commutators;
  std::vector<char> seen(static_cast<std::size_t>(order()), 0);
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) {
      int c = mul(mul(inv(a), inv(b)), mul(a, b));
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        commutators.push_back(c);
      }
    }
  }
  return closure(commutators);
}

std::string PermGroup::word(int a) const { return words_[static_cast<std::size_t>(a)]; }

}  // namespace autograph
