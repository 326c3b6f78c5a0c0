#include "doctest.h"

#include "autograph/error.hpp"
#include "autograph/group_spec.hpp"
#include "autograph/todd_coxeter.hpp"

using namespace autograph;

namespace {

int count_of_order(const PermGroup& g, int k) {
  int c = 0;
  for (int o : g.element_orders()) c += (o == k);
  return c;
}

}  // namespace

TEST_CASE("permutation composition applies the left factor first") {
  auto p = Permutation::from_cycles(3, {{0, 1}});
  auto q = Permutation::from_cycles(3, {{1, 2}});
  auto pq = p * q;
  CHECK(pq(0) == 2);
  CHECK(pq.to_cycle_string(1) == "(1 3 2)");
  CHECK((p * p).is_identity());
  CHECK(pq.order() == 3);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), ParameterError);
}

TEST_CASE("perm group tables match direct composition") {
  PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 1}})});
  REQUIRE(s4.order() == 24);
  CHECK(s4.element(0).is_identity());
  for (int a = 0; a < s4.order(); ++a) {
    CHECK(s4.element(s4.inv(a)) == s4.element(a).inverse());
    for (int b = 0; b < s4.order(); ++b) {
      REQUIRE(s4.element(s4.mul(a, b)) == s4.element(a) * s4.element(b));
    }
  }
  CHECK(s4.center().size() == 1);
  CHECK(s4.derived_subgroup().size() == 12);
  CHECK(s4.exponent() == 12);
  CHECK(s4.word(s4.generator_indices()[0]) == "a");
  CHECK(s4.word(s4.power(s4.generator_indices()[0], 2)) == "a^2");
}

TEST_CASE("todd-coxeter enumerates small presentations") {
  CHECK(group_from_presentation(1, {"aaaaa"}).order() == 5);
  CHECK(group_from_presentation(2, {"aaa", "bb", "abab"}).order() == 6);
  CHECK(group_from_presentation(2, {"aaaa", "bbbb", "baBa"}).order() == 16);
  CHECK_THROWS_AS(group_from_presentation(2, {"aaa"}, 2000), LimitError);
}

TEST_CASE("realize gives the claimed orders") {
  for (const auto& s : catalog_specs(64)) {
    INFO(to_string(s));
    CHECK(realize(s).order() == group_order(s));
  }
  CHECK(realize(GroupSpec::cyclic(1)).order() == 1);
  auto q8 = realize(GroupSpec::gen_quaternion(8));
  CHECK(q8.order() == 8);
  CHECK(count_of_order(q8, 2) == 1);
  auto g16 = realize(GroupSpec::g16());
  const auto& gi = g16.generator_indices();
  CHECK(g16.element_order(gi[0]) == 4);
  CHECK(g16.element_order(gi[1]) == 4);
  CHECK(g16.conjugate(gi[0], g16.inv(gi[1])) == g16.inv(gi[0]));
  CHECK(realize(table2_spec(8)).order() == 16);
  CHECK(realize(GroupSpec::table2(11)).order() == 27);
  CHECK(realize(GroupSpec::table2(10)).order() == 18);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(realize(GroupSpec::dicyclic(1)), ParameterError);
  CHECK_THROWS_AS(realize(GroupSpec::gen_quaternion(4)), ParameterError);
  CHECK_THROWS_AS(realize(GroupSpec::gen_quaternion(12)), ParameterError);
  CHECK_THROWS_AS(realize(GroupSpec::gen_dicyclic({2, 2}, {1, 0})), ParameterError);
  CHECK_THROWS_AS(realize(GroupSpec::gen_dicyclic({4}, {1})), ParameterError);
  CHECK_THROWS_AS(realize(GroupSpec::table2(14)), ParameterError);
  CHECK_THROWS_AS(realize(GroupSpec::cyclic(300)), LimitError);
}

TEST_CASE("group spec text round-trips") {
  const char* texts[] = {"trivial", "cyclic:12", "abelian:2x4", "dihedral:12", "gendihedral:3x3",
                         "dicyclic:3", "quaternion:8", "gendicyclic:4x2:2.0", "product:quaternion:8,cyclic:2",
                         "product:(product:cyclic:2,cyclic:3),cyclic:5", "product:cyclic:2,product:cyclic:3,cyclic:5",
                         "table2:11", "alternating:4", "g16", "g16prime"};
  for (const char* t : texts) {
    INFO(t);
    CHECK(to_string(parse_group_spec(t)) == t);
  }
  for (const auto& s : catalog_specs(32)) CHECK(parse_group_spec(to_string(s)) == s);
  CHECK_THROWS_AS(parse_group_spec("cyclic:x"), ParameterError);
  CHECK_THROWS_AS(parse_group_spec("bogus:3"), ParameterError);
  CHECK_THROWS_AS(parse_group_spec("product:cyclic:2"), ParameterError);
  CHECK_THROWS_AS(parse_group_spec("dicyclic:1"), ParameterError);
}

#include "autograph/classify.hpp"
#include "autograph/group_theory.hpp"

namespace {

PermGroup G(const char* text) { return realize(parse_group_spec(text)); }

ElementSet all_elements(const PermGroup& g) {
  ElementSet s;
  for (int i = 0; i < g.order(); ++i) s.push_back(i);
  return s;
}

std::vector<int> histogram(const PermGroup& g) {
  std::vector<int> h(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int o : g.element_orders()) ++h[static_cast<std::size_t>(o)];
  return h;
}

}  // namespace

TEST_CASE("isomorphism examples") {
  CHECK_FALSE(is_isomorphic(G("cyclic:4"), G("abelian:2x2")));
  CHECK(is_isomorphic(G("dicyclic:2"), G("quaternion:8")));
  CHECK(is_isomorphic(G("gendicyclic:4:2"), G("quaternion:8")));
  CHECK_FALSE(is_isomorphic(G("g16"), G("g16prime")));
  CHECK(is_isomorphic(G("abelian:3x7"), G("cyclic:21")));
  CHECK(is_isomorphic(G("dihedral:12"), G("product:dihedral:6,cyclic:2")));
  CHECK_FALSE(is_isomorphic(G("dihedral:8"), G("quaternion:8")));
  CHECK(is_isomorphic(G("table2:12"), G("product:cyclic:3,quaternion:8")));
  CHECK(is_isomorphic(G("table2:10"), G("gendihedral:3x3")));
  // The explicit isomorphism is a homomorphism.
  auto g = G("dicyclic:6"), h = realize(table1_spec(13));
  auto phi = find_isomorphism(g, h);
  REQUIRE(phi);
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      REQUIRE((*phi)[static_cast<std::size_t>(g.mul(a, b))] ==
              h.mul((*phi)[static_cast<std::size_t>(a)], (*phi)[static_cast<std::size_t>(b)]));
    }
  }
}

TEST_CASE("isomorphism is an equivalence on catalog groups") {
  std::vector<PermGroup> groups;
  for (const auto& s : catalog_specs(24)) groups.push_back(realize(s));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    CHECK(is_isomorphic(groups[i], groups[i]));
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (groups[i].order() != groups[j].order()) continue;
      bool ij = is_isomorphic(groups[i], groups[j]);
      CHECK(ij == is_isomorphic(groups[j], groups[i]));
      // Necessary condition: same element-order histogram.
      if (ij) CHECK(histogram(groups[i]) == histogram(groups[j]));
    }
  }
}

TEST_CASE("classification examples") {
  auto q8 = classify(G("quaternion:8"));
  CHECK(q8.is_gen_dicyclic);
  CHECK(q8.is_gen_quaternion);
  CHECK_FALSE(q8.has_grr);
  auto d12 = classify(G("dihedral:12"));
  CHECK(d12.has_grr);
  CHECK_FALSE(d12.is_gen_dicyclic);
  auto v4 = classify(G("abelian:2x2"));
  CHECK_FALSE(v4.has_grr);
  CHECK(v4.table2_index == 1);
  auto c7 = classify(G("cyclic:7"));
  CHECK(c7.cyclic_order_shape == CyclicShape::prime_power);
  CHECK(c7.shape_p == 7);
  CHECK(classify(G("cyclic:14")).cyclic_order_shape == CyclicShape::two_p);
  CHECK(classify(G("cyclic:12")).cyclic_order_shape == CyclicShape::other);
  CHECK(classify(G("cyclic:12")).table1_index == 1);
  CHECK(classify(G("product:quaternion:16,cyclic:2")).is_q2r_times_c2);
  CHECK_FALSE(classify(G("product:quaternion:8,cyclic:4")).is_q2r_times_c2);
  CHECK(classify(G("product:quaternion:8,cyclic:3")).table1_index == 17);
  CHECK(classify(G("product:quaternion:8,cyclic:3")).table2_index == 12);
  CHECK(classify(G("alternating:4")).table2_index == 7);
  CHECK(classify(G("g16")).is_gen_dicyclic);
  CHECK_FALSE(classify(G("g16prime")).is_gen_dicyclic);
  CHECK(classify(G("abelian:2x2x2x2")).has_grr == false);
  CHECK(classify(G("cyclic:2")).has_grr);
  CHECK(classify(G("trivial")).has_grr);
  CHECK(classify(G("dihedral:14")).has_grr);
}

TEST_CASE("generalized dicyclic witnesses satisfy the defining relations") {
  for (const auto& s : catalog_specs(32)) {
    auto g = realize(s);
    auto c = classify(g);
    if (s.kind == GroupKind::dicyclic || s.kind == GroupKind::gen_dicyclic ||
        s.kind == GroupKind::gen_quaternion) {
      CHECK(c.is_gen_dicyclic);
    }
    if (!c.is_gen_dicyclic) continue;
    INFO(to_string(s));
    CHECK(g.is_subgroup(c.dicyclic_a));
    CHECK(2 * c.dicyclic_a.size() == static_cast<std::size_t>(g.order()));
    int b = c.dicyclic_b;
    CHECK(g.element_order(b) == 4);
    for (int x : c.dicyclic_a) {
      CHECK(g.conjugate(x, g.inv(b)) == g.inv(x));
      for (int y : c.dicyclic_a) CHECK(g.mul(x, y) == g.mul(y, x));
    }
  }
}

TEST_CASE("sylow and hall split") {
  auto c12 = G("cyclic:12");
  auto s = sylow_hall_split(c12);
  CHECK(is_isomorphic(subgroup_group(c12, s.a2), G("cyclic:4")));
  CHECK(is_isomorphic(subgroup_group(c12, s.a2prime), G("cyclic:3")));
  auto v4 = G("abelian:2x2");
  auto t = sylow_hall_split(v4);
  CHECK(t.a2.size() == 4);
  CHECK(t.a2prime.size() == 1);
  auto c233 = G("abelian:2x3x3");
  auto u = sylow_hall_split(c233);
  CHECK(u.a2.size() == 2);
  CHECK(is_isomorphic(subgroup_group(c233, u.a2prime), G("abelian:3x3")));
  CHECK_THROWS_AS(sylow_hall_split(G("dihedral:6")), ParameterError);
  CHECK(abelian_invariants(G("abelian:2x4x3x3")) == std::vector<long long>{2, 3, 3, 4});
  CHECK(abelian_invariants(G("cyclic:12")) == std::vector<long long>{3, 4});
}

TEST_CASE("split off involution gives a direct decomposition containing c") {
  auto check = [](const PermGroup& a, int c) {
    auto s = split_off_involution(a, c);
    std::vector<int> y{s.y};
    auto cyc = a.closure(y);
    CHECK(std::find(cyc.begin(), cyc.end(), c) != cyc.end());
    ElementSet meet;
    std::set_intersection(cyc.begin(), cyc.end(), s.complement.begin(), s.complement.end(),
                          std::back_inserter(meet));
    CHECK(meet == ElementSet{0});
    CHECK(cyc.size() * s.complement.size() == static_cast<std::size_t>(a.order()));
    return s;
  };
  auto c4 = G("cyclic:4");
  int gen = c4.generator_indices()[0];
  auto s1 = check(c4, c4.power(gen, 2));
  CHECK(c4.element_order(s1.y) == 4);
  CHECK(s1.complement.size() == 1);
  auto v4 = G("abelian:2x2");
  for (int c = 1; c < 4; ++c) CHECK(check(v4, c).complement.size() == 2);
  auto c42 = G("abelian:4x2");
  int a = c42.generator_indices()[0];
  auto s3 = check(c42, c42.power(a, 2));
  CHECK(c42.element_order(s3.y) == 4);
  CHECK(s3.complement.size() == 2);
  for (const char* t : {"abelian:2x4x8", "abelian:4x4", "abelian:2x2x4", "cyclic:16"}) {
    auto g = G(t);
    for (int c = 0; c < g.order(); ++c) {
      if (g.element_order(c) == 2) check(g, c);
    }
  }
  CHECK_THROWS_AS(split_off_involution(c4, gen), ParameterError);
  CHECK_THROWS_AS(split_off_involution(G("cyclic:6"), 3), ParameterError);
}

TEST_CASE("quotient action") {
  auto q8 = G("quaternion:8");
  auto z = q8.center();
  auto q = quotient_action(q8, z);
  CHECK(q.group.order() == 4);
  CHECK(q.group.degree() == 4);
  CHECK(is_isomorphic(q.group, G("abelian:2x2")));
  for (int a = 0; a < q8.order(); ++a) {
    for (int b = 0; b < q8.order(); ++b) {
      CHECK(q.projection[static_cast<std::size_t>(q8.mul(a, b))] ==
            q.group.mul(q.projection[static_cast<std::size_t>(a)], q.projection[static_cast<std::size_t>(b)]));
    }
  }
  auto dic6 = G("dicyclic:6");
  ElementSet c3;
  for (int x = 0; x < dic6.order(); ++x) {
    if (dic6.element_order(x) == 1 || dic6.element_order(x) == 3) c3.push_back(x);
  }
  CHECK(is_isomorphic(quotient_action(dic6, c3).group, q8));
  auto dic3 = G("dicyclic:3");
  ElementSet z2;
  for (int x = 0; x < dic3.order(); ++x) {
    if (dic3.element_order(x) <= 2) z2.push_back(x);
  }
  CHECK(is_isomorphic(quotient_action(dic3, z2).group, G("dihedral:6")));
  auto d6 = G("dihedral:6");
  CHECK_THROWS_AS(quotient_action(d6, d6.closure(std::vector<int>{d6.generator_indices()[1]})), ParameterError);
}

TEST_CASE("minimal generating sets") {
  CHECK(minimal_generating_set(G("abelian:2x2")).size() == 2);
  CHECK(minimal_generating_set(G("abelian:2x2x2")).size() == 3);
  CHECK(minimal_generating_set(G("trivial")).empty());
  // Brute force over pairs agrees for small groups.
  for (const char* t : {"quaternion:8", "dihedral:8", "alternating:4", "g16", "dicyclic:3", "abelian:2x2x2"}) {
    auto g = G(t);
    auto m = minimal_generating_set(g);
    CHECK(g.closure(m).size() == static_cast<std::size_t>(g.order()));
    for (std::size_t skip = 0; skip < m.size(); ++skip) {
      auto sub = m;
      sub.erase(sub.begin() + static_cast<long>(skip));
      CHECK(g.closure(sub).size() < static_cast<std::size_t>(g.order()));
    }
    std::size_t best = 0;
    for (int a = 1; a < g.order() && !best; ++a) {
      if (g.closure(std::vector<int>{a}).size() == static_cast<std::size_t>(g.order())) best = 1;
    }
    for (int a = 1; a < g.order() && !best; ++a) {
      for (int b = a + 1; b < g.order() && !best; ++b) {
        if (g.closure(std::vector<int>{a, b}).size() == static_cast<std::size_t>(g.order())) {
          best = 2;
          CHECK(m == std::vector<int>{a, b});
        }
      }
    }
    if (best) CHECK(m.size() == best);
  }
  auto d6 = G("dihedral:6");
  auto forced = minimal_generating_set_with(d6, 5);
  CHECK(forced.front() == 5);
  CHECK(d6.closure(forced).size() == 6);
}
