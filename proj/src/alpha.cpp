#include "autograph/alpha.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "autograph/aut.hpp"
#include "autograph/cayley.hpp"
#include "autograph/classify.hpp"
#include "autograph/constructions.hpp"
#include "autograph/error.hpp"
#include "autograph/group_theory.hpp"
#include "autograph/search.hpp"

namespace autograph {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// (p, r) with q = p^r, or nullopt when q is not a prime power.
std::optional<std::pair<long long, int>> prime_power(long long q) {
  if (q < 2) return std::nullopt;
  long long p = q;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int r = 0;
  while (q % p == 0) {
    q /= p;
    ++r;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, r);
}

std::vector<long long> prime_power_factors(const std::vector<long long>& factors) {
  std::vector<long long> out;
  for (long long f : factors) {
    if (f < 1) throw ParameterError("abelian: factor orders must be positive");
    long long n = f;
    for (long long d = 2; d * d <= n; ++d) {
      long long q = 1;
      while (n % d == 0) {
        n /= d;
        q *= d;
      }
      if (q > 1) out.push_back(q);
    }
    if (n > 1) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long checked_order(const std::vector<long long>& q) {
  __int128 n = 1;
  for (long long x : q) {
    n *= x;
    if (n > (static_cast<__int128>(1) << 62)) throw LimitError("group order too large");
  }
  return static_cast<long long>(n);
}

long long alpha_of_prime_power(long long q) {
  auto pr = prime_power(q);
  return alpha_cyclic_prime_power(pr->first, pr->second);
}

std::optional<long long> table3_value(const std::vector<long long>& q) {
  for (const auto& cell : abelian_table()) {
    if (cell.factors == q) return cell.alpha;
  }
  return std::nullopt;
}

// Abelian rows of the exceptional list, keyed by ascending prime powers.
std::optional<int> abelian_table1_row(const std::vector<long long>& q) {
  static const std::vector<std::vector<long long>> rows = {
      {3, 4}, {3, 5}, {4, 5}, {3, 7}, {2, 4}, {3, 3}, {4, 4}, {5, 5}, {2, 2, 3}, {2, 3, 3}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == q) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

void consistency(bool ok, const std::string& what) {
  if (!ok) throw InternalError("alpha: " + what);
}

void set_exact(AlphaResult& r, long long value) {
  r.exact = value;
  r.lower = value;
  r.upper = value;
}

std::optional<std::vector<long long>> symbolic_abelian(const GroupSpec& s) {
  switch (s.kind) {
    case GroupKind::trivial:
      return std::vector<long long>{};
    case GroupKind::cyclic:
      return prime_power_factors({s.n});
    case GroupKind::abelian:
      return prime_power_factors(s.factors);
    case GroupKind::dihedral:
      if (s.n == 4) return std::vector<long long>{2, 2};
      return std::nullopt;
    case GroupKind::gen_dihedral: {
      long long e = 1;
      for (long long f : s.factors) e = std::lcm(e, f);
      if (e > 2) return std::nullopt;
      auto q = prime_power_factors(s.factors);
      q.push_back(2);
      return q;
    }
    case GroupKind::alternating:
      if (s.n == 3) return std::vector<long long>{3};
      return std::nullopt;
    case GroupKind::table2:
      if (s.n <= 3) return std::vector<long long>(static_cast<std::size_t>(s.n + 1), 2);
      return std::nullopt;
    case GroupKind::direct_product: {
      auto a = symbolic_abelian(*s.left);
      auto b = symbolic_abelian(*s.right);
      if (!a || !b) return std::nullopt;
      a->insert(a->end(), b->begin(), b->end());
      std::sort(a->begin(), a->end());
      return a;
    }
    default:
      return std::nullopt;
  }
}

// Order of a generalized quaternion spec, allowing Dic_m with m a power of 2.
std::optional<long long> symbolic_quaternion(const GroupSpec& s) {
  if (s.kind == GroupKind::gen_quaternion) return s.n;
  if (s.kind == GroupKind::dicyclic && (s.n & (s.n - 1)) == 0) return 4 * s.n;
  return std::nullopt;
}

bool is_cyclic_two(const GroupSpec& s) {
  if (s.kind == GroupKind::cyclic) return s.n == 2;
  if (s.kind == GroupKind::abelian) return s.factors.size() == 1 && s.factors[0] == 2;
  return false;
}

void attach(AlphaResult& r, std::optional<Graph> witness, const PermGroup* g, const AlphaOptions& options) {
  if (!witness) return;
  r.witness = std::move(witness);
  if (options.verify_witness && g && r.witness->n() <= kMaxAutVertices) {
    r.witness_verified = has_automorphism_group(*r.witness, *g);
  }
}

Graph cycle_graph(int n) {
  Graph c(n);
  for (int v = 0; v < n; ++v) c.add_edge(v, (v + 1) % n);
  return c;
}

std::optional<Graph> abelian_witness(const std::vector<long long>& q) {
  if (q.empty()) return Graph(1);
  if (q == std::vector<long long>{2}) return Graph(2, {{0, 1}});
  if (q == std::vector<long long>{3}) return c3_graph();
  if (q == std::vector<long long>{2, 2, 2}) return c2_cubed_graph();
  // K2 plus two isolated vertices.
  if (q == std::vector<long long>{2, 2}) return Graph(4, {{0, 1}});
  return std::nullopt;
}

AlphaResult abelian_result(const std::vector<long long>& q, const AlphaOptions& options) {
  AlphaResult r = alpha_abelian_bounds(q);
  if (options.build_witness) {
    std::optional<PermGroup> g;
    long long order = r.order;
    if (order <= PermGroup::kMaxOrder) {
      g = realize(q.empty() ? GroupSpec::trivial() : GroupSpec::abelian(q));
    }
    auto w = abelian_witness(q);
    if (!w && r.tag == AlphaCase::grr_bound && g && order <= 32) {
      auto grr = find_grr(*g);
      if (grr.status == GrrStatus::found) w = cayley_graph(*g, grr.connection_set);
    }
    attach(r, w, g ? &*g : nullptr, options);
  }
  return r;
}

AlphaResult nonabelian_result(const PermGroup& g, const AlphaOptions& options) {
  const Classification c = classify(g);
  const long long n = g.order();
  AlphaResult r;
  r.order = n;
  auto finish = [&](std::optional<Graph> w) {
    if (options.build_witness) attach(r, std::move(w), &g, options);
    return r;
  };

  if (c.table1_index) {
    const int k = *c.table1_index;
    r.tag = AlphaCase::table1_exceptional;
    set_exact(r, table1_alpha(k));
    r.provenance = "exceptional list: " + table1_name(k);
    if (!options.build_witness) return r;
    switch (k) {
      case 11: return finish(dicq_graph(3));
      case 12: return finish(dicq_graph(5));
      case 13: return finish(dic6_graph());
      case 14: return finish(g16_graph());
      case 15: return finish(a4_graph());
      case 16: return finish(gprime16_graph());
      case 17: return finish(q8c3_graph());
      default: return r;
    }
  }
  if (c.is_gen_quaternion) {
    r.tag = AlphaCase::quaternion;
    set_exact(r, 2 * n);
    r.provenance = "generalized quaternion: alpha = 2|G|";
    return finish(options.build_witness ? std::optional<Graph>(babai_graph(g)) : std::nullopt);
  }
  if (c.is_q2r_times_c2) {
    r.tag = AlphaCase::quaternion_times_c2;
    set_exact(r, n + 2);
    r.provenance = "generalized quaternion times C2: alpha = |G| + 2";
    const int log = std::countr_zero(static_cast<unsigned long long>(n));
    return finish(options.build_witness ? std::optional<Graph>(q2r_c2_graph(log - 1)) : std::nullopt);
  }
  r.tag = AlphaCase::bounds_only;
  if (c.table2_index) {
    const int k = *c.table2_index;
    if (k >= 4 && k <= 6) {
      r.upper = n / 2;
      r.provenance = "dihedral: the n-cycle";
      return finish(cycle_graph(static_cast<int>(n / 2)));
    }
    std::optional<Graph> w;
    switch (k) {
      case 8: w = gamma1(); break;
      case 10: w = gamma2(); break;
      case 11: w = gamma3(); break;
      case 13: w = gamma4(); break;
      default: throw InternalError("alpha: unexpected non-GRR group " + table2_name(k));
    }
    r.upper = w->n();
    r.provenance = "explicit graph for " + table2_name(k);
    return finish(w);
  }
  if (c.is_gen_dicyclic && n >= 64 && (n & (n - 1)) == 0) {
    PermGroup qc =
        realize(GroupSpec::product(GroupSpec::gen_quaternion(n / 8), GroupSpec::abelian({2, 2, 2})));
    if (is_isomorphic(g, qc)) {
      const int log = std::countr_zero(static_cast<unsigned long long>(n));
      Graph w = gamma_r_plus_2(log - 3);
      r.upper = w.n();
      r.provenance = "generalized quaternion times C2^3: union with the 6-vertex C2^3 graph";
      return finish(w);
    }
  }
  if (c.is_gen_dicyclic) {
    r.tag = AlphaCase::dicyclic_construction;
    r.upper = n;
    r.provenance = "generalized dicyclic: two-part construction";
    if (!options.build_witness) return r;
    try {
      auto parts = dicyclic_parts(g);
      r.upper = parts.graph.n();
      return finish(parts.graph);
    } catch (const LimitError& e) {
      r.provenance += " (witness not built: " + std::string(e.what()) + ")";
      return r;
    }
  }
  if (c.has_grr) {
    r.tag = AlphaCase::grr_bound;
    r.upper = n;
    r.provenance = "GRR exists: alpha <= |G|";
    if (options.build_witness && n <= 32) {
      auto grr = find_grr(g);
      if (grr.status == GrrStatus::found) return finish(cayley_graph(g, grr.connection_set));
    }
    return r;
  }
  throw InternalError("alpha: group falls outside every case");
}

}  // namespace

std::string to_string(AlphaCase c) {
  switch (c) {
    case AlphaCase::trivial: return "trivial";
    case AlphaCase::cyclic_prime_power: return "cyclic_prime_power";
    case AlphaCase::cyclic_2p: return "cyclic_2p";
    case AlphaCase::cyclic_table1: return "cyclic_table1";
    case AlphaCase::quaternion: return "quaternion";
    case AlphaCase::quaternion_times_c2: return "quaternion_times_c2";
    case AlphaCase::table1_exceptional: return "table1_exceptional";
    case AlphaCase::abelian_table3: return "abelian_table3";
    case AlphaCase::grr_bound: return "grr_bound";
    case AlphaCase::dicyclic_construction: return "dicyclic_construction";
    case AlphaCase::bounds_only: return "bounds_only";
  }
  return "bounds_only";
}

const std::vector<AbelianTableCell>& abelian_table() {
  static const std::vector<AbelianTableCell> cells = [] {
    std::vector<AbelianTableCell> out;
    const long long cols2[] = {2, 3, 4, 5, 7, 8};
    const long long rows2[][6] = {{4, 11, 12, 17, 16, 16},
                                  {0, 18, 18, 21, 23, 22},
                                  {0, 0, 20, 25, 24, 24},
                                  {0, 0, 0, 30, 29, 29}};
    const long long rowkeys2[] = {2, 3, 4, 5};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 6; ++j) {
        if (rows2[i][j] == 0) continue;
        std::vector<long long> key{rowkeys2[i], cols2[j]};
        std::sort(key.begin(), key.end());
        out.push_back({key, rows2[i][j]});
      }
    }
    const long long cols3[] = {2, 3, 4, 5, 7, 8, 9, 11, 13};
    const long long rows3[][9] = {{6, 13, 14, 19, 18, 18, 19, 26, 30},
                                  {0, 20, 20, 23, 25, 24, 23, 33, 37},
                                  {0, 0, 22, 27, 26, 26, 26, 34, 38}};
    const long long rowkeys3[] = {2, 3, 4};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 9; ++j) {
        if (rows3[i][j] == 0) continue;
        std::vector<long long> key{2, rowkeys3[i], cols3[j]};
        std::sort(key.begin(), key.end());
        out.push_back({key, rows3[i][j]});
      }
    }
    return out;
  }();
  return cells;
}

long long table1_alpha(int index) {
  static const long long values[] = {18, 21, 25, 23, 12, 18, 20, 30, 13, 20, 17, 23, 25, 18, 16, 18, 25};
  if (index < 1 || index > 17) throw ParameterError("table1: index must be in 1..17");
  return values[index - 1];
}

long long alpha_cyclic_prime_power(long long p, int r) {
  if (!is_prime(p)) throw ParameterError("alpha_cyclic_prime_power: p must be prime");
  if (r < 1) throw ParameterError("alpha_cyclic_prime_power: r must be positive");
  long long q = 1;
  for (int i = 0; i < r; ++i) {
    if (q > (1LL << 60) / p) throw LimitError("alpha_cyclic_prime_power: p^r too large");
    q *= p;
  }
  if (q == 2) return 2;
  if (p == 3 || p == 5) return q + 2 * p;
  if (p == 2) return q + 6;
  return q + p;
}

AlphaResult alpha_abelian_bounds(const std::vector<long long>& factors) {
  const std::vector<long long> q = prime_power_factors(factors);
  AlphaResult r;
  r.order = checked_order(q);
  const long long n = r.order;
  if (q.empty()) {
    r.tag = AlphaCase::trivial;
    set_exact(r, 1);
    r.provenance = "trivial group: K1";
    return r;
  }
  const auto t3 = table3_value(q);
  const auto t1 = abelian_table1_row(q);
  if (t1 && t3) consistency(table1_alpha(*t1) == *t3, "exceptional list and abelian table disagree");
  // C2 x C_q: alpha = 2 + alpha(C_q).
  std::optional<long long> two_times;
  if (q.size() == 2 && q[0] == 2) two_times = 2 + alpha_of_prime_power(q[1]);
  if (two_times && t3) consistency(*two_times == *t3, "C2 x C_q rule and abelian table disagree");

  if (q.size() == 1) {
    auto pr = prime_power(q[0]);
    r.tag = AlphaCase::cyclic_prime_power;
    set_exact(r, alpha_cyclic_prime_power(pr->first, pr->second));
    r.provenance = "cyclic prime power formula";
    return r;
  }
  // Prime-power factors give a cyclic group exactly when their primes differ.
  std::vector<long long> primes;
  for (long long x : q) primes.push_back(prime_power(x)->first);
  const bool cyclic = std::adjacent_find(primes.begin(), primes.end()) == primes.end();
  if (q.size() == 2 && q[0] == 2 && is_prime(q[1]) && q[1] > 2) {
    r.tag = AlphaCase::cyclic_2p;
    set_exact(r, *two_times);
    r.provenance = "cyclic of order 2p: alpha = 2 + alpha(C_p)";
    return r;
  }
  if (t1) {
    r.tag = cyclic ? AlphaCase::cyclic_table1 : AlphaCase::table1_exceptional;
    set_exact(r, table1_alpha(*t1));
    r.provenance = "exceptional list: " + table1_name(*t1);
    return r;
  }
  if (t3) {
    r.tag = AlphaCase::abelian_table3;
    set_exact(r, *t3);
    r.provenance = "small abelian table";
    return r;
  }
  if (two_times) {
    r.tag = AlphaCase::abelian_table3;
    set_exact(r, *two_times);
    r.provenance = "C2 x C_q rule: alpha = 2 + alpha(C_q)";
    return r;
  }
  long long sum = 0;
  for (long long x : q) sum += alpha_of_prime_power(x);
  const bool elementary = std::all_of(q.begin(), q.end(), [](long long x) { return x == 2; });
  r.upper = std::min(sum, n);
  r.tag = elementary ? AlphaCase::grr_bound : AlphaCase::bounds_only;
  r.provenance = sum <= n ? "sum of alpha over the cyclic factors"
                          : "not an exception: alpha <= |G|";
  if (elementary) r.provenance += "; elementary abelian 2-group of rank >= 5 has a GRR";
  return r;
}

AlphaResult alpha_abelian_bounds(const GroupSpec& spec) {
  validate(spec);
  auto q = symbolic_abelian(spec);
  if (!q) throw ParameterError("alpha_abelian_bounds: " + to_string(spec) + " is not abelian");
  return alpha_abelian_bounds(*q);
}

AlphaResult alpha(const GroupSpec& spec, const AlphaOptions& options) {
  validate(spec);
  if (auto q = symbolic_abelian(spec)) return abelian_result(*q, options);

  const BigInt big = group_order(spec);
  if (big > PermGroup::kMaxOrder) {
    if (big > (BigInt(1) << 62)) throw LimitError("group order too large");
    const long long n = static_cast<long long>(big);
    AlphaResult r;
    r.order = n;
    if (auto qo = symbolic_quaternion(spec)) {
      r.tag = AlphaCase::quaternion;
      set_exact(r, 2 * *qo);
      r.provenance = "generalized quaternion: alpha = 2|G|";
      return r;
    }
    if (spec.kind == GroupKind::direct_product) {
      auto ql = symbolic_quaternion(*spec.left);
      auto qr = symbolic_quaternion(*spec.right);
      if ((ql && is_cyclic_two(*spec.right)) || (qr && is_cyclic_two(*spec.left))) {
        r.tag = AlphaCase::quaternion_times_c2;
        set_exact(r, n + 2);
        r.provenance = "generalized quaternion times C2: alpha = |G| + 2";
        return r;
      }
    }
    // Every exception of order above 256 is one of the two families above.
    const bool clear = spec.kind == GroupKind::dihedral || spec.kind == GroupKind::gen_dihedral ||
                       spec.kind == GroupKind::alternating || spec.kind == GroupKind::dicyclic;
    if (!clear) throw LimitError("alpha: " + to_string(spec) + " needs classification beyond order 256");
    r.tag = spec.kind == GroupKind::dicyclic ? AlphaCase::dicyclic_construction : AlphaCase::grr_bound;
    r.upper = n;
    r.provenance = "not an exception: alpha <= |G|";
    return r;
  }

  const PermGroup g = realize(spec);
  if (g.is_abelian()) return abelian_result(abelian_invariants(g), options);
  AlphaResult r = nonabelian_result(g, options);
  if (r.exact) consistency(*r.exact <= 2 * r.order, "exact value exceeds 2|G|");
  return r;
}

long long babai_upper_bound(const GroupSpec& spec) {
  validate(spec);
  auto q = symbolic_abelian(spec);
  const BigInt n = group_order(spec);
  if (q && q->size() == 1 && (n == 3 || n == 4 || n == 5)) {
    throw ParameterError("babai_upper_bound: excluded for the cyclic groups of order 3, 4 and 5");
  }
  if (n > (BigInt(1) << 61)) throw LimitError("group order too large");
  return 2 * static_cast<long long>(n);
}

}  // namespace autograph
