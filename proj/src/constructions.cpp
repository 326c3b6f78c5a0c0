#include "autograph/constructions.hpp"

#include <algorithm>
#include <string>

#include "autograph/cayley.hpp"
#include "autograph/classify.hpp"
#include "autograph/error.hpp"
#include "autograph/group_spec.hpp"
#include "autograph/group_theory.hpp"

namespace autograph {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Vertex parts O, O', O'', ... with 1-based labels inside each part.
class Layout {
 public:
  explicit Layout(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    int n = 0;
    for (int s : sizes_) {
      offsets_.push_back(n);
      n += s;
    }
    graph_ = Graph(n);
    for (std::size_t p = 0; p < sizes_.size(); ++p) {
      for (int v = 1; v <= sizes_[p]; ++v) {
        graph_.set_label(at(static_cast<int>(p), v), std::to_string(v) + std::string(p, '\''));
      }
    }
  }

  int at(int part, int v) const { return offsets_[static_cast<std::size_t>(part)] + v - 1; }

  // Adds [v, w] for labels v of part p and w of part q satisfying pred(v, w).
  // Within one part each unordered pair is tested once with v < w.
  template <class Pred>
  void rule(int p, int q, Pred pred) {
    const int np = sizes_[static_cast<std::size_t>(p)];
    const int nq = sizes_[static_cast<std::size_t>(q)];
    for (int v = 1; v <= np; ++v) {
      for (int w = (p == q ? v + 1 : 1); w <= nq; ++w) {
        if (pred(v, w)) graph_.add_edge(at(p, v), at(q, w));
      }
    }
  }

  Graph& graph() { return graph_; }

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  Graph graph_;
};

void expect_counts(const Graph& g, int n, int e, const char* what) {
  if (g.n() != n || (e >= 0 && g.edge_count() != e)) {
    throw InternalError(std::string(what) + ": expected " + std::to_string(n) + " vertices and " +
                        std::to_string(e) + " edges, built " + std::to_string(g.n()) + " and " +
                        std::to_string(g.edge_count()));
  }
}

PermGroup quaternion(int r) {
  if (r < 3) throw ParameterError("need r >= 3");
  if (r > 7) throw LimitError("Q_{2^r} is supported for r <= 7");
  return realize(GroupSpec::gen_quaternion(1LL << r));
}

std::vector<int> members_of(const std::vector<int>& projection, const ElementSet& set, int size) {
  std::vector<char> in(static_cast<std::size_t>(size), 0);
  for (int x : set) in[static_cast<std::size_t>(projection[static_cast<std::size_t>(x)])] = 1;
  std::vector<int> out;
  for (int i = 0; i < size; ++i) {
    if (in[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

std::vector<int> others(const std::vector<int>& part, int size) {
  std::vector<int> out;
  for (int i = 0; i < size; ++i) {
    if (!std::binary_search(part.begin(), part.end(), i)) out.push_back(i);
  }
  return out;
}

}  // namespace

Graph c2_cubed_graph() { return from_graph6(kC2Cubed6Graph6); }
Graph c3_graph() { return from_graph6(kC3Nine9Graph6); }

BabaiParts babai_parts(const PermGroup& g, const std::vector<int>& h) {
  if (g.order() < 6) throw ParameterError("Babai's construction needs |G| >= 6");
  if (g.is_cyclic()) throw ParameterError("Babai's construction needs a non-cyclic group");
  BabaiParts parts;
  parts.generators = h.empty() ? minimal_generating_set(g) : h;
  const auto& gens = parts.generators;
  if (!h.empty()) {
    for (int x : h) {
      if (x <= 0 || x >= g.order()) throw ParameterError("generator index out of range");
    }
    if (static_cast<int>(g.closure(h).size()) != g.order() ||
        h.size() != minimal_generating_set(g).size()) {
      throw ParameterError("not a minimal generating set");
    }
  }
  const int n = g.order();
  const std::size_t d = gens.size();
  if (d < 2) throw InternalError("non-cyclic group with a one-element generating set");

  parts.x1 = Graph(n);
  parts.x3 = Graph(n);
  for (int x = 0; x < n; ++x) {
    for (std::size_t i = 0; i + 1 < d; ++i) parts.x1.add_edge(g.mul(x, gens[i]), g.mul(x, gens[i + 1]));
    parts.x3.add_edge(g.mul(x, gens[0]), x);
  }
  parts.x2 = parts.x1.degree(0) != parts.x3.degree(0) ? parts.x3 : complement(parts.x3);

  Graph& out = parts.x;
  out = Graph(2 * n);
  for (auto [u, v] : parts.x1.edges()) out.add_edge(u, v);
  for (auto [u, v] : parts.x2.edges()) out.add_edge(n + u, n + v);
  for (int x = 0; x < n; ++x) {
    out.add_edge(n + x, x);
    for (int t : gens) out.add_edge(n + x, g.mul(x, t));
  }
  for (int x = 0; x < n; ++x) {
    out.set_label(x, g.word(x));
    out.set_label(n + x, g.word(x) + "'");
  }
  return parts;
}

Graph babai_graph(const PermGroup& g, const std::vector<int>& h) { return babai_parts(g, h).x; }

Graph figure1_c4() {
  static const int edges[][2] = {{1, 3}, {1, 7}, {1, 5}, {1, 9}, {2, 4}, {2, 6},  {2, 8},
                                 {2, 10}, {3, 4}, {3, 7}, {3, 8}, {3, 6}, {4, 5}, {4, 9},
                                 {4, 8}, {5, 6}, {5, 10}, {5, 9}, {6, 7}, {6, 10}};
  Graph g(10);
  for (const auto& e : edges) g.add_edge(e[0] - 1, e[1] - 1);
  expect_counts(g, 10, 20, "figure1_c4");
  return g;
}

Graph gamma1() {
  Layout l({8, 8});
  l.rule(0, 0, [](int v, int w) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        bool a = v == 1 + i + 4 * j || v == 3 + i + 4 * j;
        bool b = w == 5 + i - 4 * j || w == 7 + i - 4 * j;
        bool a2 = w == 1 + i + 4 * j || w == 3 + i + 4 * j;
        bool b2 = v == 5 + i - 4 * j || v == 7 + i - 4 * j;
        if ((a && b) || (a2 && b2)) return true;
      }
    }
    return false;
  });
  l.rule(1, 1, [](int v, int w) { return (v <= 4) == (w <= 4); });
  l.rule(0, 1, [](int v, int w) {
    if (w - v == 0 || w - v == 4) return true;
    if (mod(v - w, 4) == 2 && v > 4 && w <= 4) return true;
    int d = mod(v - w, 4);
    return (d == 1 || d == 3) && ((v > 4) == (w > 4));
  });
  expect_counts(l.graph(), 16, 52, "gamma1");
  return l.graph();
}

Graph gamma2() {
  auto w2_adjacent = [](int v, int w) {
    bool same_block = (v - 1) / 3 == (w - 1) / 3;
    int d = mod(w - v, 9);
    auto is = [&](int a, int b) { return (v == a && w == b) || (v == b && w == a); };
    return same_block || d == 3 || d == 6 || is(1, 6) || is(2, 4) || is(3, 5);
  };
  Layout l({9, 9});
  l.rule(1, 1, w2_adjacent);
  l.rule(0, 0, [&](int v, int w) { return !w2_adjacent(v, w); });
  l.rule(0, 1, [](int v, int w) {
    bool low = v <= 3 && w <= 3;
    bool mid = v >= 4 && v <= 6 && w >= 4 && w <= 6;
    return !(low || mid);
  });
  expect_counts(l.graph(), 18, 99, "gamma2");
  return l.graph();
}

Graph gamma3() {
  Layout l({9, 9, 9});
  auto to_prime = [](int v, int w) {
    int d = mod(w - v, 9);
    int k = mod(v, 3);
    if (k == 0) return d == 0 || d == 1 || d == 8;
    return d == 0 || d == mod(2 * k, 9) || d == mod(4 * k, 9);
  };
  l.rule(0, 0, [](int, int) { return true; });
  // O' is complete as well: the listed rules alone give 135 edges, 36 short
  // of the 171 the graph is stated to have; both versions have Aut = G3.
  l.rule(1, 1, [](int, int) { return true; });
  l.rule(0, 2, [](int v, int w) {
    int d = mod(w - v, 9);
    return mod(w - v, 3) == 1 || d == 0 || d == 3;
  });
  l.rule(0, 1, to_prime);
  l.rule(1, 2, [&](int v, int w) { return to_prime(w, v); });
  expect_counts(l.graph(), 27, 171, "gamma3");
  return l.graph();
}

Graph gamma4() {
  Graph g = disjoint_union(figure1_c4(), babai_graph(quaternion(3)));
  expect_counts(g, 26, -1, "gamma4");
  return g;
}

Graph gamma_r_plus_2(int r) {
  Graph g = disjoint_union(babai_graph(quaternion(r)), c2_cubed_graph());
  expect_counts(g, (1 << (r + 1)) + 6, -1, "gamma_r_plus_2");
  return g;
}

Graph q2r_c2_graph(int r) {
  Graph k2(2);
  k2.add_edge(0, 1);
  Graph g = disjoint_union(babai_graph(quaternion(r)), k2);
  expect_counts(g, (1 << (r + 1)) + 2, -1, "q2r_c2_graph");
  return g;
}

int dicyclic_vertex_formula(int order, int r, int k) {
  return std::max(2 * order / k, 10) + (1 + 5 / k) * order / (1 << r);
}

DicyclicParts dicyclic_parts(const PermGroup& g) {
  auto witness = gen_dicyclic_witness(g);
  if (!witness) throw HypothesisError("dicyclic", "group is not generalized dicyclic");
  Classification cls = classify(g);
  if (cls.is_gen_quaternion) throw HypothesisError("i", "group is generalized quaternion");
  if (cls.is_q2r_times_c2) throw HypothesisError("ii", "group is Q_{2^r} x C2");
  if (g.order() >= 64 && (g.order() & (g.order() - 1)) == 0) {
    auto target = realize(GroupSpec::product(GroupSpec::gen_quaternion(g.order() / 8),
                                             GroupSpec::abelian({2, 2, 2})));
    if (is_isomorphic(g, target)) throw HypothesisError("ii", "group is Q_{2^r} x C2^3");
  }
  if (cls.table1_index && *cls.table1_index >= 11 && *cls.table1_index <= 14) {
    throw HypothesisError("iii", "group is " + table1_name(*cls.table1_index));
  }

  DicyclicParts p;
  p.a = witness->first;
  p.b = witness->second;
  p.b2 = g.mul(p.b, p.b);
  auto split = sylow_hall_split(g, p.a);
  p.a2 = split.a2;
  p.a2prime = split.a2prime;
  auto inv = split_off_involution(g, p.a2, p.b2);
  p.y = inv.y;
  std::vector<int> xgens = generators_of(g, inv.complement);
  for (int h : generators_of(g, p.a2prime)) xgens.push_back(h);
  p.x = g.closure(xgens);
  p.k = static_cast<int>(p.x.size());
  for (int o = g.element_order(p.y); o > 1; o /= 2) ++p.r;
  if (p.k < 3) throw InternalError("dicyclic split left |X| < 3 after the hypotheses");

  const int n1 = g.order() / p.k;  // |G/X|
  if (p.r == 1) {
    p.gamma1 = figure1_c4();
    for (int v = 0; v < 10; ++v) (v % 2 == 0 ? p.t1 : p.t2).push_back(v);
  } else {
    auto q = quotient_action(g, p.x);
    const int yq = q.projection[static_cast<std::size_t>(p.y)];
    const int bq = q.projection[static_cast<std::size_t>(p.b)];
    p.gamma1 = babai_graph(q.group, {yq, bq});
    p.t1 = members_of(q.projection, p.a, n1);
    p.t2 = others(p.t1, n1);
  }

  ElementSet y_group = g.closure(std::vector<int>{p.y});
  auto q2 = quotient_action(g, y_group);
  const int n2 = q2.group.order();  // 2k
  const bool x_is_c3_squared = p.k == 9 && !subgroup_group(g, p.x).is_cyclic();
  if (p.k <= 5) {
    const int bq = q2.projection[static_cast<std::size_t>(p.b)];
    p.gamma2 = babai_graph(q2.group, minimal_generating_set_with(q2.group, bq));
  } else if (x_is_c3_squared) {
    p.gamma2 = gamma2();
  } else {
    if (n2 > 32) throw LimitError("GRR search for G/<y> supports order at most 32");
    auto grr = find_grr(q2.group);
    if (grr.status == GrrStatus::budget_exhausted) {
      throw LimitError("GRR search for G/<y> exhausted its budget");
    }
    if (grr.status != GrrStatus::found) throw InternalError("G/<y> has no GRR");
    Graph cay = cayley_graph(q2.group, grr.connection_set);
    Graph co = complement(cay);
    if ((p.k + cay.degree(0)) % 2 == 0) {
      p.gamma2 = cay;
    } else if ((p.k + co.degree(0)) % 2 == 0) {
      p.gamma2 = co;
    } else {
      throw InternalError("neither the GRR nor its complement has the required valency parity");
    }
  }
  if (x_is_c3_squared) {
    // Aut(gamma2) fixes W1 and W2, so the halves are the C3 x C3 orbits
    // {1,2,3,1',2',3'} and {4,5,6,4',5',6'}, swapped by the reflections.
    p.s1 = {0, 1, 2, 9, 10, 11};
    p.s2 = {3, 4, 5, 12, 13, 14};
  } else {
    p.s1 = members_of(q2.projection, p.a, n2);
    p.s2 = others(p.s1, n2);
  }

  p.graph = disjoint_union(p.gamma1, p.gamma2);
  const int off = p.gamma1.n();
  auto join = [&](const std::vector<int>& t, const std::vector<int>& s) {
    for (int u : t) {
      for (int v : s) {
        p.cross.emplace_back(u, off + v);
        p.graph.add_edge(u, off + v);
      }
    }
  };
  join(p.t1, p.s1);
  join(p.t2, p.s2);
  const int expected = dicyclic_vertex_formula(g.order(), p.r, p.k);
  if (p.graph.n() != expected) {
    throw InternalError("dicyclic graph has " + std::to_string(p.graph.n()) + " vertices, formula gives " +
                        std::to_string(expected));
  }
  return p;
}

Graph dicyclic_graph(const PermGroup& g) { return dicyclic_parts(g).graph; }

Graph g16_graph() {
  // Parts: O (8), O' (2), O'' (4), O''' (4).
  Layout l({8, 2, 4, 4});
  l.rule(0, 1, [](int v, int w) { return mod(v - w, 2) == 0; });
  l.rule(2, 3, [](int v, int w) { int d = mod(w - v, 4); return d == 0 || d == 1; });
  l.rule(2, 2, [](int v, int w) { return mod(v - w, 4) == 2; });
  auto to_double = [](int v, int w) {
    for (int k = 0; k < 2; ++k) {
      if (v >= 4 * k + 1 && v <= 4 * k + 4 && (w == k + 1 || w == k + 3)) return true;
    }
    return false;
  };
  l.rule(0, 2, to_double);
  l.rule(0, 3, to_double);
  l.rule(0, 0, [](int v, int w) {
    int k = v <= 4 ? 0 : 1;
    if ((w <= 4 ? 0 : 1) == k) return false;
    int d = mod(w - v, 4);
    return d == 0 || d == mod(k == 0 ? 1 : -1, 4);
  });
  expect_counts(l.graph(), 18, -1, "g16_graph");
  return l.graph();
}

Graph dicq_graph(int q) {
  if (q != 3 && q != 5) throw ParameterError("dicq_graph: q must be 3 or 5");
  // Parts: O (2q), O' (q), O'' (4), O''' (4).
  Layout l({2 * q, q, 4, 4});
  l.rule(0, 0, [q](int v, int w) { return mod(w - v, q) == 0; });
  l.rule(2, 2, [](int v, int w) { int d = mod(w - v, 4); return d == 1 || d == 3; });
  l.rule(0, 1, [q](int v, int w) {
    return (mod(w - v, q) == 0 && v <= q) || (mod(w - v, q) == 1 && v > q);
  });
  // Parity of w against the half of v; the parity of w - v is not invariant
  // under the order-q automorphism.
  auto to_double = [q](int v, int w) {
    return (mod(w, 2) == 0 && v > q) || (mod(w, 2) == 1 && v <= q);
  };
  l.rule(0, 2, to_double);
  l.rule(0, 3, to_double);
  l.rule(2, 3, [](int v, int w) { int d = mod(w - v, 4); return d == 0 || d == 1; });
  expect_counts(l.graph(), 3 * q + 8, -1, "dicq_graph");
  return l.graph();
}

Graph dic6_graph() {
  // Parts: O (8), O' (8), O'' (6), O''' (3).
  Layout l({8, 8, 6, 3});
  // The printed matching w - v = 4 (mod 8) alone leaves Aut of order 48;
  // every Dic6 graph on these orbits joins each v' to both cross-half
  // vertices of equal parity.
  l.rule(1, 1, [](int v, int w) { return mod(w - v, 2) == 0 && ((v <= 4) != (w <= 4)); });
  l.rule(2, 2, [](int v, int w) {
    return (mod(w - v, 3) == 1 && v <= 3 && w > 3) || (mod(w - v, 3) == 2 && v > 3 && w <= 3);
  });
  l.rule(0, 1, [](int v, int w) {
    if (mod(w - v, 8) == 0 || (mod(w - v, 4) == 3 && ((v <= 4) == (w <= 4)))) return true;
    // Cross-half pairs needed for Aut = Dic6.
    if ((v <= 4) == (w <= 4)) return false;
    return mod(v + w, 4) == (v <= 4 ? 2 : 0);
  });
  l.rule(0, 2, [](int v, int w) { return (v <= 4 && w <= 3) || (v > 4 && w > 3); });
  l.rule(2, 3, [](int v, int w) { return mod(w - v, 3) == 0; });
  expect_counts(l.graph(), 25, -1, "dic6_graph");
  return l.graph();
}

Graph q8c3_graph() {
  Graph g = disjoint_union(babai_graph(quaternion(3)), c3_graph());
  expect_counts(g, 25, -1, "q8c3_graph");
  return g;
}

Graph gprime16_graph() {
  // Parts: V1 (8), V2 (8), V3 (2).
  Layout l({8, 8, 2});
  l.rule(0, 0, [](int v, int w) { int d = mod(w - v, 8); return d == 1 || d == 7; });
  l.rule(1, 1, [](int v, int w) { int d = mod(w - v, 8); return d == 3 || d == 5; });
  l.rule(0, 1, [](int v, int w) { int d = mod(w - v, 8); return d == 0 || d == 1 || d == 3; });
  l.rule(0, 2, [](int, int w) { return w == 1; });
  l.rule(1, 2, [](int, int w) { return w == 2; });
  expect_counts(l.graph(), 18, -1, "gprime16_graph");
  return l.graph();
}

Graph a4_graph() {
  static const int pairs[][2] = {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {5, 2}, {6, 2},
                                 {2, 3}, {4, 3}, {6, 3}, {3, 4}, {4, 4}, {5, 4}};
  auto listed = [](int v, int w) {
    return std::any_of(std::begin(pairs), std::end(pairs), [&](const int* p) { return p[0] == v && p[1] == w; });
  };
  // Parts: O (6), O' (6), O'' (4).
  Layout l({6, 6, 4});
  l.rule(0, 0, [](int v, int w) { return mod(v - w, 3) != 0; });
  l.rule(1, 1, [](int, int) { return true; });
  l.rule(2, 2, [](int, int) { return true; });
  l.rule(0, 1, [](int v, int w) { return mod(w - v, 3) == 2; });
  l.rule(0, 2, listed);
  l.rule(1, 2, [&](int v, int w) { return !listed(v, w); });
  expect_counts(l.graph(), 16, -1, "a4_graph");
  return l.graph();
}

}  // namespace autograph
