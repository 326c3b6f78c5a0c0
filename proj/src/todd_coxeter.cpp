#include "autograph/todd_coxeter.hpp"

#include <cctype>

#include "autograph/error.hpp"

namespace autograph {

namespace {

// HLT coset enumeration with coincidence processing (union-find on cosets).
class CosetTable {
 public:
  CosetTable(int num_generators, int max_cosets)
      : columns_(2 * num_generators), max_cosets_(max_cosets) {
    add_row();
  }

  int columns() const { return columns_; }
  int size() const { return static_cast<int>(parent_.size()); }
  bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c * columns_ + x)]; }
  static int inverse_column(int x) { return x ^ 1; }

  void define(int c, int x) {
    if (live_count_ >= max_cosets_) {
      throw LimitError("coset enumeration exceeded " + std::to_string(max_cosets_) + " cosets");
    }
    int n = add_row();
    at(c, x) = n;
    at(n, inverse_column(x)) = c;
  }

  void scan_and_fill(int alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0) {
        f = at(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= i && at(b, inverse_column(w[static_cast<std::size_t>(j)])) >= 0) {
        b = at(b, inverse_column(w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[static_cast<std::size_t>(i)]) = b;
        at(b, inverse_column(w[static_cast<std::size_t>(i)])) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

 private:
  int add_row() {
    int n = size();
    parent_.push_back(n);
    table_.resize(table_.size() + static_cast<std::size_t>(columns_), -1);
    ++live_count_;
    return n;
  }

  int rep(int k) {
    int root = k;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(k)] != root) {
      int next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = root;
      k = next;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_count_;
    queue.push_back(b);
  }

  void coincidence(int alpha, int beta) {
    std::vector<int> queue;
    merge(alpha, beta, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int gamma = queue[q];
      for (int x = 0; x < columns_; ++x) {
        int delta = at(gamma, x);
        if (delta < 0) continue;
        int xi = inverse_column(x);
        if (at(delta, xi) == gamma) at(delta, xi) = -1;
        int mu = rep(gamma), nu = rep(delta);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, xi) >= 0) {
          merge(mu, at(nu, xi), queue);
        } else {
          at(mu, x) = nu;
          at(nu, xi) = mu;
        }
      }
    }
  }

  int columns_;
  int max_cosets_;
  int live_count_ = 0;
  std::vector<int> parent_;
  std::vector<int> table_;
};

std::vector<int> parse_relator(const std::string& r, int num_generators) {
  std::vector<int> word;
  for (char ch : r) {
    auto uc = static_cast<unsigned char>(ch);
    if (!std::isalpha(uc)) throw ParameterError("bad relator letter in '" + r + "'");
    int g = std::tolower(uc) - 'a';
    if (g >= num_generators) throw ParameterError("relator uses unknown generator: '" + r + "'");
    word.push_back(2 * g + (std::isupper(uc) ? 1 : 0));
  }
  return word;
}

}  // namespace

PermGroup group_from_presentation(int num_generators, const std::vector<std::string>& relators,
                                  int max_cosets) {
  if (num_generators < 1) throw ParameterError("presentation needs a generator");
  std::vector<std::vector<int>> words;
  for (const auto& r : relators) words.push_back(parse_relator(r, num_generators));

  CosetTable table(num_generators, max_cosets);
  for (int alpha = 0; alpha < table.size(); ++alpha) {
    for (const auto& w : words) {
      if (!table.live(alpha)) break;
      table.scan_and_fill(alpha, w);
    }
    if (!table.live(alpha)) continue;
    for (int x = 0; x < table.columns(); ++x) {
      if (table.at(alpha, x) < 0) table.define(alpha, x);
    }
  }

  std::vector<int> number(static_cast<std::size_t>(table.size()), -1);
  int count = 0;
  for (int c = 0; c < table.size(); ++c) {
    if (table.live(c)) number[static_cast<std::size_t>(c)] = count++;
  }
  if (count > PermGroup::kMaxOrder) {
    throw LimitError("presented group has order " + std::to_string(count) +
                     ", above the supported limit");
  }
  std::vector<Permutation> gens;
  for (int g = 0; g < num_generators; ++g) {
    std::vector<int> images;
    for (int c = 0; c < table.size(); ++c) {
      if (!table.live(c)) continue;
      int target = table.at(c, 2 * g);
      if (target < 0 || !table.live(target)) throw InternalError("incomplete coset table");
      images.push_back(number[static_cast<std::size_t>(target)]);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(count, std::move(gens));
}

}  // namespace autograph
