#include "autograph/group_spec.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "autograph/error.hpp"
#include "autograph/todd_coxeter.hpp"

namespace autograph {

GroupSpec GroupSpec::cyclic(long long n) {
  GroupSpec s;
  s.kind = GroupKind::cyclic;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::abelian(std::vector<long long> factors) {
  GroupSpec s;
  s.kind = GroupKind::abelian;
  s.factors = std::move(factors);
  return s;
}

GroupSpec GroupSpec::dihedral(long long order) {
  GroupSpec s;
  s.kind = GroupKind::dihedral;
  s.n = order;
  return s;
}

GroupSpec GroupSpec::gen_dihedral(std::vector<long long> factors) {
  GroupSpec s;
  s.kind = GroupKind::gen_dihedral;
  s.factors = std::move(factors);
  return s;
}

GroupSpec GroupSpec::dicyclic(long long m) {
  GroupSpec s;
  s.kind = GroupKind::dicyclic;
  s.n = m;
  return s;
}

GroupSpec GroupSpec::gen_quaternion(long long order) {
  GroupSpec s;
  s.kind = GroupKind::gen_quaternion;
  s.n = order;
  return s;
}

GroupSpec GroupSpec::gen_dicyclic(std::vector<long long> factors, std::vector<long long> involution) {
  GroupSpec s;
  s.kind = GroupKind::gen_dicyclic;
  s.factors = std::move(factors);
  s.involution = std::move(involution);
  return s;
}

GroupSpec GroupSpec::product(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = GroupKind::direct_product;
  s.left = std::make_shared<const GroupSpec>(std::move(a));
  s.right = std::make_shared<const GroupSpec>(std::move(b));
  return s;
}

GroupSpec GroupSpec::table2(int index) {
  GroupSpec s;
  s.kind = GroupKind::table2;
  s.n = index;
  return s;
}

GroupSpec GroupSpec::alternating(int degree) {
  GroupSpec s;
  s.kind = GroupKind::alternating;
  s.n = degree;
  return s;
}

GroupSpec GroupSpec::g16() {
  GroupSpec s;
  s.kind = GroupKind::g16;
  s.n = 16;
  return s;
}

GroupSpec GroupSpec::g16prime() {
  GroupSpec s;
  s.kind = GroupKind::g16prime;
  s.n = 16;
  return s;
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  if (a.kind != b.kind || a.n != b.n || a.factors != b.factors || a.involution != b.involution) {
    return false;
  }
  if (a.kind != GroupKind::direct_product) return true;
  return *a.left == *b.left && *a.right == *b.right;
}

namespace {

constexpr int kTable2Orders[] = {4, 8, 16, 6, 8, 10, 12, 16, 16, 18, 27, 24, 32};

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

void validate_factors(const std::vector<long long>& factors, const char* what) {
  require(!factors.empty(), std::string(what) + ": factor list is empty");
  for (long long f : factors) {
    require(f >= 2, std::string(what) + ": every cyclic factor must have order at least 2");
  }
}

bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

long long factor_lcm(const std::vector<long long>& factors) {
  long long e = 1;
  for (long long f : factors) e = std::lcm(e, f);
  return e;
}

}  // namespace

void validate(const GroupSpec& s) {
  switch (s.kind) {
    case GroupKind::trivial:
      return;
    case GroupKind::cyclic:
      require(s.n >= 1, "cyclic: order must be at least 1");
      return;
    case GroupKind::abelian:
      validate_factors(s.factors, "abelian");
      return;
    case GroupKind::dihedral:
      require(s.n >= 4 && s.n % 2 == 0, "dihedral: order must be even and at least 4");
      return;
    case GroupKind::gen_dihedral:
      validate_factors(s.factors, "gendihedral");
      return;
    case GroupKind::dicyclic:
      require(s.n >= 2, "dicyclic: parameter m must be at least 2");
      return;
    case GroupKind::gen_quaternion:
      require(s.n >= 8 && is_power_of_two(s.n), "quaternion: order must be 2^r with r >= 3");
      return;
    case GroupKind::gen_dicyclic: {
      validate_factors(s.factors, "gendicyclic");
      require(s.involution.size() == s.factors.size(),
              "gendicyclic: involution needs one coordinate per factor");
      bool nonzero = false;
      for (std::size_t i = 0; i < s.factors.size(); ++i) {
        long long c = s.involution[i], f = s.factors[i];
        require(c >= 0 && c < f, "gendicyclic: involution coordinate out of range");
        require((2 * c) % f == 0, "gendicyclic: b^2 must have order 2");
        if (c != 0) nonzero = true;
      }
      require(nonzero, "gendicyclic: b^2 must not be the identity");
      require(factor_lcm(s.factors) > 2, "gendicyclic: A must contain an element of order 2k, k >= 2");
      return;
    }
    case GroupKind::direct_product:
      require(s.left && s.right, "product: missing operand");
      validate(*s.left);
      validate(*s.right);
      return;
    case GroupKind::table2:
      require(s.n >= 1 && s.n <= 13, "table2: index must be in 1..13");
      return;
    case GroupKind::alternating:
      require(s.n >= 3, "alternating: degree must be at least 3");
      return;
    case GroupKind::g16:
    case GroupKind::g16prime:
      return;
  }
  throw InternalError("unknown group kind");
}

BigInt group_order(const GroupSpec& s) {
  validate(s);
  auto product_of = [](const std::vector<long long>& f) {
    BigInt p = 1;
    for (long long x : f) p *= x;
    return p;
  };
  switch (s.kind) {
    case GroupKind::trivial:
      return 1;
    case GroupKind::cyclic:
    case GroupKind::dihedral:
    case GroupKind::gen_quaternion:
      return s.n;
    case GroupKind::abelian:
      return product_of(s.factors);
    case GroupKind::gen_dihedral:
    case GroupKind::gen_dicyclic:
      return 2 * product_of(s.factors);
    case GroupKind::dicyclic:
      return BigInt(4) * s.n;
    case GroupKind::direct_product:
      return group_order(*s.left) * group_order(*s.right);
    case GroupKind::table2:
      return kTable2Orders[s.n - 1];
    case GroupKind::alternating: {
      BigInt f = 1;
      for (long long i = 3; i <= s.n; ++i) f *= i;
      return f;
    }
    case GroupKind::g16:
    case GroupKind::g16prime:
      return 16;
  }
  throw InternalError("unknown group kind");
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

long long parse_int(std::string_view t, std::string_view context) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParameterError("bad integer '" + std::string(t) + "' in " + std::string(context));
  }
  return v;
}

std::vector<long long> parse_list(std::string_view t, char sep, std::string_view context) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = t.find(sep, start);
    out.push_back(parse_int(t.substr(start, pos == std::string_view::npos ? pos : pos - start), context));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<long long>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string_view strip_parens(std::string_view t) {
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') return t.substr(1, t.size() - 2);
  return t;
}

GroupSpec parse_impl(std::string_view text) {
  std::size_t colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto need_arg = [&] {
    if (colon == std::string_view::npos || rest.empty()) {
      throw ParameterError("group spec '" + std::string(text) + "' needs a parameter");
    }
  };
  auto no_arg = [&] {
    if (colon != std::string_view::npos) {
      throw ParameterError("group spec '" + std::string(head) + "' takes no parameter");
    }
  };
  if (head == "trivial") {
    no_arg();
    return GroupSpec::trivial();
  }
  if (head == "g16") {
    no_arg();
    return GroupSpec::g16();
  }
  if (head == "g16prime") {
    no_arg();
    return GroupSpec::g16prime();
  }
  need_arg();
  if (head == "cyclic") return GroupSpec::cyclic(parse_int(rest, text));
  if (head == "abelian") return GroupSpec::abelian(parse_list(rest, 'x', text));
  if (head == "dihedral") return GroupSpec::dihedral(parse_int(rest, text));
  if (head == "gendihedral") return GroupSpec::gen_dihedral(parse_list(rest, 'x', text));
  if (head == "dicyclic") return GroupSpec::dicyclic(parse_int(rest, text));
  if (head == "quaternion") return GroupSpec::gen_quaternion(parse_int(rest, text));
  if (head == "table2") return GroupSpec::table2(static_cast<int>(parse_int(rest, text)));
  if (head == "alternating") return GroupSpec::alternating(static_cast<int>(parse_int(rest, text)));
  if (head == "gendicyclic") {
    std::size_t c = rest.find(':');
    if (c == std::string_view::npos) {
      throw ParameterError("gendicyclic needs factors and involution, e.g. gendicyclic:4x2:2.0");
    }
    return GroupSpec::gen_dicyclic(parse_list(rest.substr(0, c), 'x', text),
                                   parse_list(rest.substr(c + 1), '.', text));
  }
  if (head == "product") {
    int depth = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == '(') ++depth;
      if (rest[i] == ')') --depth;
      if (rest[i] == ',' && depth == 0) {
        return GroupSpec::product(parse_impl(strip_parens(rest.substr(0, i))),
                                  parse_impl(strip_parens(rest.substr(i + 1))));
      }
    }
    throw ParameterError("product needs two comma-separated operands");
  }
  throw ParameterError("unknown group family '" + std::string(head) + "'");
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec s = parse_impl(text);
  validate(s);
  return s;
}

std::string to_string(const GroupSpec& s) {
  switch (s.kind) {
    case GroupKind::trivial:
      return "trivial";
    case GroupKind::cyclic:
      return "cyclic:" + std::to_string(s.n);
    case GroupKind::abelian:
      return "abelian:" + join(s.factors, 'x');
    case GroupKind::dihedral:
      return "dihedral:" + std::to_string(s.n);
    case GroupKind::gen_dihedral:
      return "gendihedral:" + join(s.factors, 'x');
    case GroupKind::dicyclic:
      return "dicyclic:" + std::to_string(s.n);
    case GroupKind::gen_quaternion:
      return "quaternion:" + std::to_string(s.n);
    case GroupKind::gen_dicyclic:
      return "gendicyclic:" + join(s.factors, 'x') + ":" + join(s.involution, '.');
    case GroupKind::direct_product: {
      std::string l = to_string(*s.left);
      if (s.left->kind == GroupKind::direct_product) l = "(" + l + ")";
      return "product:" + l + "," + to_string(*s.right);
    }
    case GroupKind::table2:
      return "table2:" + std::to_string(s.n);
    case GroupKind::alternating:
      return "alternating:" + std::to_string(s.n);
    case GroupKind::g16:
      return "g16";
    case GroupKind::g16prime:
      return "g16prime";
  }
  throw InternalError("unknown group kind");
}

// ---------------------------------------------------------------------------
// Realization

namespace {

// Right regular representation of A x {1, b} with the product
// (a1 b^e1)(a2 b^e2) = (a1 + (-1)^e1 a2 + [e1 = e2 = 1] c) b^(e1 + e2 mod 2).
// c = 0 gives Dih(A); an involution c gives Dic(A, c).
PermGroup realize_extension(const std::vector<long long>& factors, const std::vector<long long>& c) {
  const std::size_t s = factors.size();
  long long a_order = 1;
  for (long long f : factors) a_order *= f;
  const int n = static_cast<int>(2 * a_order);

  auto decode = [&](int idx, std::vector<long long>& a) {
    int e = idx / static_cast<int>(a_order);
    long long r = idx % a_order;
    for (std::size_t i = s; i-- > 0;) {
      a[i] = r % factors[i];
      r /= factors[i];
    }
    return e;
  };
  auto encode = [&](const std::vector<long long>& a, int e) {
    long long r = 0;
    for (std::size_t i = 0; i < s; ++i) r = r * factors[i] + a[i];
    return static_cast<int>(e * a_order + r);
  };
  auto multiply = [&](int x, const std::vector<long long>& a2, int e2) {
    std::vector<long long> a1(s);
    int e1 = decode(x, a1);
    for (std::size_t i = 0; i < s; ++i) {
      long long v = a1[i] + (e1 ? -a2[i] : a2[i]) + ((e1 && e2) ? c[i] : 0);
      a1[i] = ((v % factors[i]) + factors[i]) % factors[i];
    }
    return encode(a1, e1 ^ e2);
  };

  std::vector<Permutation> gens;
  auto right_mult = [&](const std::vector<long long>& a, int e) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = multiply(x, a, e);
    return Permutation(std::move(images));
  };
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<long long> unit(s, 0);
    unit[i] = 1;
    gens.push_back(right_mult(unit, 0));
  }
  gens.push_back(right_mult(std::vector<long long>(s, 0), 1));
  std::vector<std::string> names;
  if (s == 1) names = {"a", "b"};
  return PermGroup(n, std::move(gens), std::move(names));
}

PermGroup realize_abelian(const std::vector<long long>& factors) {
  int degree = 0;
  for (long long f : factors) degree += static_cast<int>(f);
  std::vector<Permutation> gens;
  int offset = 0;
  for (long long f : factors) {
    std::vector<int> cycle;
    for (int i = 0; i < f; ++i) cycle.push_back(offset + i);
    gens.push_back(Permutation::from_cycles(degree, {cycle}));
    offset += static_cast<int>(f);
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup realize_product(const PermGroup& a, const PermGroup& b) {
  const int da = a.degree(), db = b.degree(), d = da + db;
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<int> images(static_cast<std::size_t>(d));
    for (int i = 0; i < da; ++i) images[static_cast<std::size_t>(i)] = g(i);
    for (int i = 0; i < db; ++i) images[static_cast<std::size_t>(da + i)] = da + i;
    gens.emplace_back(std::move(images));
  }
  for (const auto& g : b.generators()) {
    std::vector<int> images(static_cast<std::size_t>(d));
    for (int i = 0; i < da; ++i) images[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < db; ++i) images[static_cast<std::size_t>(da + i)] = da + g(i);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(d, std::move(gens));
}

PermGroup realize_alternating(int n) {
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return PermGroup(n, std::move(gens));
}

PermGroup realize_table2(int k) {
  switch (k) {
    case 8:
      return group_from_presentation(3, {"aa", "bb", "cc", "abcACB", "bcaBAC"});
    case 10:
      return group_from_presentation(3, {"aaa", "bbb", "cc", "abAB", "acac", "bcbc"});
    case 11:
      // b^3 = 1 is implied by the group having order 27; without it the
      // presentation defines an infinite group.
      return group_from_presentation(3, {"aaa", "bbb", "ccc", "acAC", "bcBC", "BabCA"});
    default:
      return realize(table2_spec(k));
  }
}

}  // namespace

GroupSpec table2_spec(int k) {
  switch (k) {
    case 1: return GroupSpec::abelian({2, 2});
    case 2: return GroupSpec::abelian({2, 2, 2});
    case 3: return GroupSpec::abelian({2, 2, 2, 2});
    case 4: return GroupSpec::dihedral(6);
    case 5: return GroupSpec::dihedral(8);
    case 6: return GroupSpec::dihedral(10);
    case 7: return GroupSpec::alternating(4);
    case 9: return GroupSpec::g16prime();
    case 12: return GroupSpec::product(GroupSpec::gen_quaternion(8), GroupSpec::cyclic(3));
    case 13: return GroupSpec::product(GroupSpec::gen_quaternion(8), GroupSpec::cyclic(4));
    case 8:
    case 10:
    case 11:
      return GroupSpec::table2(k);
    default:
      throw ParameterError("table2: index must be in 1..13");
  }
}

std::string table2_name(int k) {
  static const char* const names[] = {
      "C2xC2",
      "C2xC2xC2",
      "C2xC2xC2xC2",
      "D6",
      "D8",
      "D10",
      "A4",
      "<a,b,c | a^2=b^2=c^2=1, abc=bca=cab>",
      "G'16",
      "<a,b,c | a^3=b^3=c^2=1, ab=ba, (ac)^2=(bc)^2=1>",
      "<a,b,c | a^3=b^3=c^3=1, ac=ca, bc=cb, b^-1ab=ac>",
      "Q8xC3",
      "Q8xC4",
  };
  if (k < 1 || k > 13) throw ParameterError("table2: index must be in 1..13");
  return names[k - 1];
}

PermGroup realize(const GroupSpec& s) {
  if (group_order(s) > PermGroup::kMaxOrder) {
    throw LimitError("group " + to_string(s) + " has order above the supported limit of " +
                     std::to_string(PermGroup::kMaxOrder));
  }
  switch (s.kind) {
    case GroupKind::trivial:
      return PermGroup();
    case GroupKind::cyclic:
      if (s.n == 1) return PermGroup();
      return realize_abelian({s.n});
    case GroupKind::abelian:
      return realize_abelian(s.factors);
    case GroupKind::dihedral:
      return realize_extension({s.n / 2}, {0});
    case GroupKind::gen_dihedral:
      return realize_extension(s.factors, std::vector<long long>(s.factors.size(), 0));
    case GroupKind::dicyclic:
      return realize_extension({2 * s.n}, {s.n});
    case GroupKind::gen_quaternion:
      return realize_extension({s.n / 2}, {s.n / 4});
    case GroupKind::gen_dicyclic:
      return realize_extension(s.factors, s.involution);
    case GroupKind::direct_product:
      return realize_product(realize(*s.left), realize(*s.right));
    case GroupKind::table2:
      return realize_table2(static_cast<int>(s.n));
    case GroupKind::alternating:
      return realize_alternating(static_cast<int>(s.n));
    case GroupKind::g16:
      return group_from_presentation(2, {"aaaa", "bbbb", "baBa"});
    case GroupKind::g16prime:
      return group_from_presentation(2, {"aaaaaaaa", "bb", "baBAAAAA"});
  }
  throw InternalError("unknown group kind");
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

// Prime-power factor lists (ascending) of every abelian group of order n.
std::vector<std::vector<long long>> abelian_shapes(long long n) {
  std::vector<std::vector<std::vector<long long>>> per_prime;
  long long m = n;
  for (long long p = 2; p * p <= m || m > 1; ++p) {
    if (p * p > m) p = m;
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    // Partitions of e into non-increasing parts.
    std::vector<std::vector<long long>> options;
    std::vector<int> part;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
      if (remaining == 0) {
        std::vector<long long> f;
        for (int k : part) {
          long long q = 1;
          for (int i = 0; i < k; ++i) q *= p;
          f.push_back(q);
        }
        std::sort(f.begin(), f.end());
        options.push_back(f);
        return;
      }
      for (int k = std::min(remaining, max_part); k >= 1; --k) {
        part.push_back(k);
        self(self, remaining - k, k);
        part.pop_back();
      }
    };
    rec(rec, e, e);
    per_prime.push_back(options);
  }
  std::vector<std::vector<long long>> shapes{{}};
  for (const auto& options : per_prime) {
    std::vector<std::vector<long long>> next;
    for (const auto& base : shapes) {
      for (const auto& opt : options) {
        auto f = base;
        f.insert(f.end(), opt.begin(), opt.end());
        next.push_back(f);
      }
    }
    shapes = std::move(next);
  }
  return shapes;
}

bool shape_is_cyclic(const std::vector<long long>& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (std::gcd(f[i], f[j]) != 1) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<GroupSpec> catalog_specs(int max_order) {
  std::vector<GroupSpec> out;
  auto add = [&](GroupSpec s) {
    if (group_order(s) <= max_order) out.push_back(std::move(s));
  };
  add(GroupSpec::trivial());
  for (long long n = 2; n <= max_order; ++n) add(GroupSpec::cyclic(n));
  std::vector<std::vector<long long>> noncyclic;
  for (long long n = 2; n <= max_order; ++n) {
    for (auto& f : abelian_shapes(n)) {
      if (!shape_is_cyclic(f)) noncyclic.push_back(f);
    }
  }
  for (const auto& f : noncyclic) add(GroupSpec::abelian(f));
  for (long long n = 6; n <= max_order; n += 2) add(GroupSpec::dihedral(n));
  for (const auto& f : noncyclic) {
    if (factor_lcm(f) > 2 && 2 * std::accumulate(f.begin(), f.end(), 1LL, std::multiplies<>()) <= max_order) {
      add(GroupSpec::gen_dihedral(f));
    }
  }
  for (long long m = 2; 4 * m <= max_order; ++m) add(GroupSpec::dicyclic(m));
  for (long long q = 8; q <= max_order; q *= 2) add(GroupSpec::gen_quaternion(q));
  for (const auto& f : noncyclic) {
    long long size = std::accumulate(f.begin(), f.end(), 1LL, std::multiplies<>());
    if (size % 2 || factor_lcm(f) <= 2 || 2 * size > max_order) continue;
    // One involution per distinct 2-power factor size.
    std::vector<long long> seen;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] % 2 || std::find(seen.begin(), seen.end(), f[i]) != seen.end()) continue;
      seen.push_back(f[i]);
      std::vector<long long> c(f.size(), 0);
      c[i] = f[i] / 2;
      add(GroupSpec::gen_dicyclic(f, c));
    }
  }
  add(GroupSpec::alternating(4));
  add(GroupSpec::g16());
  add(GroupSpec::g16prime());
  for (int k = 1; k <= 13; ++k) add(GroupSpec::table2(k));
  const auto q8 = GroupSpec::gen_quaternion(8);
  add(GroupSpec::product(q8, GroupSpec::cyclic(2)));
  add(GroupSpec::product(q8, GroupSpec::cyclic(3)));
  add(GroupSpec::product(q8, GroupSpec::cyclic(4)));
  add(GroupSpec::product(q8, GroupSpec::abelian({2, 2})));
  add(GroupSpec::product(q8, GroupSpec::abelian({2, 2, 2})));
  for (long long q = 16; 2 * q <= max_order; q *= 2) {
    add(GroupSpec::product(GroupSpec::gen_quaternion(q), GroupSpec::cyclic(2)));
  }
  add(GroupSpec::product(GroupSpec::dicyclic(3), GroupSpec::cyclic(2)));
  add(GroupSpec::product(GroupSpec::dihedral(6), GroupSpec::cyclic(3)));
  add(GroupSpec::product(GroupSpec::dihedral(6), GroupSpec::cyclic(4)));
  add(GroupSpec::product(GroupSpec::dihedral(8), GroupSpec::cyclic(2)));
  add(GroupSpec::product(GroupSpec::alternating(4), GroupSpec::cyclic(2)));
  add(GroupSpec::product(GroupSpec::dihedral(6), GroupSpec::dihedral(6)));
  return out;
}

}  // namespace autograph
