#include "autograph/aut.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "autograph/error.hpp"

namespace autograph {

namespace {

using Mask = std::uint64_t;
using Cells = std::vector<Mask>;

int lowest(Mask m) { return std::countr_zero(m); }

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::vector<std::vector<int>> orbits_of(const std::vector<std::vector<int>>& gens, int n) {
  UnionFind uf(n);
  for (const auto& g : gens) {
    for (int v = 0; v < n; ++v) uf.unite(v, g[static_cast<std::size_t>(v)]);
  }
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

class Engine {
 public:
  Engine(const Graph& g, const std::vector<int>& colors, BigInt max_order)
      : n_(g.n()), max_order_(std::move(max_order)) {
    if (n_ > kMaxAutVertices) {
      throw LimitError("automorphism engine supports at most " + std::to_string(kMaxAutVertices) + " vertices");
    }
    if (!colors.empty() && static_cast<int>(colors.size()) != n_) {
      throw ParameterError("color vector length differs from vertex count");
    }
    adj_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = n_ ? g.row(v)[0] : 0;
    colors_ = colors.empty() ? std::vector<int>(static_cast<std::size_t>(n_), 0) : colors;
  }

  void run() {
    if (n_ == 0) {
      best_lab_ = {};
      return;
    }
    std::map<int, Mask> by_color;
    for (int v = 0; v < n_; ++v) by_color[colors_[static_cast<std::size_t>(v)]] |= Mask{1} << v;
    Cells root;
    for (auto& [c, m] : by_color) root.push_back(m);
    refine(root, std::deque<Mask>(root.begin(), root.end()));

    // Leftmost path.
    std::vector<Cells> path_cells;
    std::vector<int> path_target, path_vertex;
    Cells cells = root;
    for (int t = target_cell(cells); t >= 0; t = target_cell(cells)) {
      int v = lowest(cells[static_cast<std::size_t>(t)]);
      path_cells.push_back(cells);
      path_target.push_back(t);
      path_vertex.push_back(v);
      cells = individualize(cells, t, v);
    }
    leaf(cells);

    for (int k = static_cast<int>(path_vertex.size()) - 1; k >= 0; --k) {
      std::vector<int> prefix(path_vertex.begin(), path_vertex.begin() + k);
      const int vstar = path_vertex[static_cast<std::size_t>(k)];
      const Cells& node = path_cells[static_cast<std::size_t>(k)];
      const int t = path_target[static_cast<std::size_t>(k)];
      std::vector<int> failed;
      for (Mask m = node[static_cast<std::size_t>(t)]; m; m &= m - 1) {
        int w = lowest(m);
        if (w == vstar) continue;
        UnionFind uf = stabilizer_orbits(prefix);
        if (uf.find(w) == uf.find(vstar)) continue;
        bool seen = std::any_of(failed.begin(), failed.end(), [&](int f) { return uf.find(f) == uf.find(w); });
        if (seen) continue;
        prefix.push_back(w);
        bool found = explore(individualize(node, t, w), prefix);
        prefix.pop_back();
        if (!found) failed.push_back(w);
      }
      UnionFind uf = stabilizer_orbits(prefix);
      long long orbit = 0;
      for (Mask m = node[static_cast<std::size_t>(t)]; m; m &= m - 1) {
        orbit += (uf.find(lowest(m)) == uf.find(vstar));
      }
      order_ *= orbit;
      if (max_order_ > 0 && order_ > max_order_) {
        exceeded_ = true;
        return;
      }
    }
  }

  AutResult result() const {
    AutResult r;
    for (const auto& g : gens_) r.generators.emplace_back(g);
    r.order = order_;
    r.orbits = orbits_of(gens_, n_);
    r.order_exceeded = exceeded_;
    return r;
  }

  const std::vector<int>& best_labeling() const { return best_lab_; }

 private:
  void refine(Cells& cells, std::deque<Mask> queue) const {
    std::vector<int> count(static_cast<std::size_t>(n_));
    std::size_t singletons = 0;
    for (Mask c : cells) singletons += (std::popcount(c) == 1);
    while (!queue.empty() && singletons < cells.size()) {
      Mask w = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < cells.size(); ++i) {
        Mask c = cells[i];
        if (std::popcount(c) == 1) continue;
        int lo = n_, hi = -1;
        for (Mask m = c; m; m &= m - 1) {
          int v = lowest(m);
          int k = std::popcount(adj_[static_cast<std::size_t>(v)] & w);
          count[static_cast<std::size_t>(v)] = k;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) continue;
        std::map<int, Mask> parts;
        for (Mask m = c; m; m &= m - 1) {
          int v = lowest(m);
          parts[count[static_cast<std::size_t>(v)]] |= Mask{1} << v;
        }
        std::vector<Mask> frags;
        for (auto& [k, m] : parts) frags.push_back(m);
        cells[i] = frags[0];
        cells.insert(cells.begin() + static_cast<long>(i) + 1, frags.begin() + 1, frags.end());
        for (Mask f : frags) {
          queue.push_back(f);
          singletons += (std::popcount(f) == 1);
        }
        i += frags.size() - 1;
      }
    }
  }

  static int target_cell(const Cells& cells) {
    int best = -1, size = 65;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      int s = std::popcount(cells[i]);
      if (s > 1 && s < size) {
        size = s;
        best = static_cast<int>(i);
      }
    }
    return best;
  }

  Cells individualize(const Cells& cells, int t, int v) const {
    Cells child = cells;
    Mask single = Mask{1} << v;
    child[static_cast<std::size_t>(t)] = single;
    child.insert(child.begin() + t + 1, cells[static_cast<std::size_t>(t)] & ~single);
    refine(child, std::deque<Mask>{single});
    return child;
  }

  UnionFind stabilizer_orbits(const std::vector<int>& prefix) const {
    UnionFind uf(n_);
    for (const auto& g : gens_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return g[static_cast<std::size_t>(p)] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, g[static_cast<std::size_t>(v)]);
    }
    return uf;
  }

  bool explore(const Cells& cells, std::vector<int>& prefix) {
    int t = target_cell(cells);
    if (t < 0) return leaf(cells);
    std::vector<int> done;
    std::size_t gens_seen = gens_.size();
    UnionFind uf = stabilizer_orbits(prefix);
    for (Mask m = cells[static_cast<std::size_t>(t)]; m; m &= m - 1) {
      int v = lowest(m);
      if (gens_.size() != gens_seen) {
        uf = stabilizer_orbits(prefix);
        gens_seen = gens_.size();
      }
      if (std::any_of(done.begin(), done.end(), [&](int d) { return uf.find(d) == uf.find(v); })) continue;
      done.push_back(v);
      prefix.push_back(v);
      bool found = explore(individualize(cells, t, v), prefix);
      prefix.pop_back();
      if (found) return true;
    }
    return false;
  }

  // Relabeled adjacency for a discrete partition; lab[v] = position.
  std::vector<Mask> relabeled(const std::vector<int>& order) const {
    std::vector<Mask> rows(static_cast<std::size_t>(n_), 0);
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n_; ++i) {
      Mask r = 0;
      for (Mask m = adj_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]; m; m &= m - 1) {
        r |= Mask{1} << pos[static_cast<std::size_t>(lowest(m))];
      }
      // Bit-reverse so lexicographic comparison of rows reads positions left to right.
      rows[static_cast<std::size_t>(i)] = reverse_bits(r);
    }
    return rows;
  }

  static Mask reverse_bits(Mask x) {
    Mask r = 0;
    for (int i = 0; i < 64; ++i) {
      r = (r << 1) | (x & 1);
      x >>= 1;
    }
    return r;
  }

  // Returns true when the leaf is equivalent to the first leaf.
  bool leaf(const Cells& cells) {
    std::vector<int> order;
    for (Mask c : cells) order.push_back(lowest(c));
    auto rows = relabeled(order);
    if (zeta_order_.empty()) {
      zeta_order_ = order;
      zeta_rows_ = rows;
      best_order_ = order;
      best_rows_ = rows;
      set_best_lab();
      return false;
    }
    if (rows == zeta_rows_) {
      add_generator(zeta_order_, order);
      return true;
    }
    if (rows == best_rows_) {
      add_generator(best_order_, order);
    } else if (rows < best_rows_) {
      best_rows_ = rows;
      best_order_ = order;
      set_best_lab();
    }
    return false;
  }

  void set_best_lab() {
    best_lab_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) best_lab_[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(i)])] = i;
  }

  // Maps from[i] -> to[i].
  void add_generator(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> g(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) g[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = to[static_cast<std::size_t>(i)];
    bool identity = true;
    for (int v = 0; v < n_; ++v) identity = identity && g[static_cast<std::size_t>(v)] == v;
    if (!identity) gens_.push_back(std::move(g));
  }

  int n_;
  BigInt max_order_;
  std::vector<Mask> adj_;
  std::vector<int> colors_;
  std::vector<std::vector<int>> gens_;
  std::vector<int> zeta_order_, best_order_, best_lab_;
  std::vector<Mask> zeta_rows_, best_rows_;
  BigInt order_ = 1;
  bool exceeded_ = false;
};

}  // namespace

AutResult automorphisms(const Graph& g, const AutOptions& options) {
  Engine e(g, options.colors, options.max_order);
  e.run();
  return e.result();
}

CanonicalResult canonical_labeling(const Graph& g, const std::vector<int>& colors) {
  Engine e(g, colors, 0);
  e.run();
  CanonicalResult r{e.result(), Permutation::identity(g.n()), Graph(g.n())};
  if (g.n() > 0) {
    r.labeling = Permutation(e.best_labeling());
    r.form = relabel(g, r.labeling);
  }
  return r;
}

Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

AutResult automorphisms_bruteforce(const Graph& g) {
  const int n = g.n();
  if (n > 8) throw LimitError("brute-force automorphism oracle supports at most 8 vertices");
  std::vector<std::vector<int>> autos;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      autos.push_back(image);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == g.has_edge(image[static_cast<std::size_t>(u)], w);
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      self(self, v + 1);
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  rec(rec, 0);
  AutResult r;
  r.order = static_cast<long long>(autos.size());
  std::vector<std::vector<int>> nontrivial;
  for (auto& a : autos) {
    bool id = true;
    for (int v = 0; v < n; ++v) id = id && a[static_cast<std::size_t>(v)] == v;
    if (!id) nontrivial.push_back(a);
  }
  for (const auto& a : nontrivial) r.generators.emplace_back(a);
  r.orbits = orbits_of(nontrivial, n);
  return r;
}

std::vector<Permutation> generated_elements(const std::vector<Permutation>& generators, int degree) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> queue{Permutation::identity(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : generators) {
      Permutation next = queue[k] * g;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace autograph
