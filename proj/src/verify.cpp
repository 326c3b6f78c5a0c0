#include "autograph/verify.hpp"

#include <future>
#include <set>
#include <sstream>

#include "autograph/alpha.hpp"
#include "autograph/aut.hpp"
#include "autograph/cayley.hpp"
#include "autograph/classify.hpp"
#include "autograph/constructions.hpp"
#include "autograph/error.hpp"
#include "autograph/group_theory.hpp"
#include "autograph/search.hpp"

namespace autograph {

namespace {

Check make(std::string section, std::string name, std::string expected, std::string actual) {
  Check c{std::move(section), std::move(name), std::move(expected), std::move(actual), false};
  c.pass = c.expected == c.actual;
  return c;
}

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParameterError(std::string("expected an integer for ") + what + ", got '" + text + "'");
}

void require_params(std::string_view name, const std::vector<std::string>& params, std::size_t count) {
  if (params.size() != count) {
    throw ParameterError("construction " + std::string(name) + " takes " + std::to_string(count) +
                         " parameter(s), got " + std::to_string(params.size()));
  }
}

GroupSpec quaternion_times(int r, GroupSpec other) {
  if (r < 3 || r > 7) throw ParameterError("r must be in 3..7");
  return GroupSpec::product(GroupSpec::gen_quaternion(1LL << r), std::move(other));
}

std::string summary(int v, int e, const BigInt& order, bool iso) {
  std::ostringstream s;
  s << "V=" << v;
  if (e >= 0) s << " E=" << e;
  s << " |Aut|=" << order << " iso=" << (iso ? "yes" : "no");
  return s.str();
}

std::optional<long long> exact_alpha(const GroupSpec& spec) { return alpha(spec, {false, false}).exact; }

std::string text(const std::optional<long long>& v) { return v ? std::to_string(*v) : "none"; }

}  // namespace

std::vector<std::string> construction_names() {
  return {"figure1", "gamma1", "gamma2", "gamma3", "gamma4", "gamma-r2", "q2r-c2", "g16", "gprime16", "dicq",
          "dic6",    "q8c3",   "a4",     "c2cubed", "c3",    "babai",    "dicyclic"};
}

NamedConstruction build_construction(std::string_view name, const std::vector<std::string>& params) {
  auto simple = [&](Graph g, const char* spec) {
    require_params(name, params, 0);
    return NamedConstruction{std::move(g), parse_group_spec(spec)};
  };
  if (name == "figure1") return simple(figure1_c4(), "cyclic:4");
  if (name == "gamma1") return simple(gamma1(), "table2:8");
  if (name == "gamma2") return simple(gamma2(), "table2:10");
  if (name == "gamma3") return simple(gamma3(), "table2:11");
  if (name == "gamma4") return simple(gamma4(), "table2:13");
  if (name == "g16") return simple(g16_graph(), "g16");
  if (name == "gprime16") return simple(gprime16_graph(), "g16prime");
  if (name == "dic6") return simple(dic6_graph(), "dicyclic:6");
  if (name == "q8c3") return simple(q8c3_graph(), "product:quaternion:8,cyclic:3");
  if (name == "a4") return simple(a4_graph(), "alternating:4");
  if (name == "c2cubed") return simple(c2_cubed_graph(), "abelian:2x2x2");
  if (name == "c3") return simple(c3_graph(), "cyclic:3");
  if (name == "gamma-r2" || name == "q2r-c2") {
    require_params(name, params, 1);
    const int r = parse_int(params[0], "r");
    if (name == "gamma-r2") return {gamma_r_plus_2(r), quaternion_times(r, GroupSpec::abelian({2, 2, 2}))};
    return {q2r_c2_graph(r), quaternion_times(r, GroupSpec::cyclic(2))};
  }
  if (name == "dicq") {
    require_params(name, params, 1);
    const int q = parse_int(params[0], "q");
    if (q != 3 && q != 5) throw ParameterError("dicq takes q = 3 or 5");
    return {dicq_graph(q), GroupSpec::dicyclic(q)};
  }
  if (name == "babai" || name == "dicyclic") {
    require_params(name, params, 1);
    GroupSpec spec = parse_group_spec(params[0]);
    PermGroup g = realize(spec);
    return {name == "babai" ? babai_graph(g) : dicyclic_graph(g), spec};
  }
  throw ParameterError("unknown construction '" + std::string(name) + "'");
}

ConstructionVerdict verify_construction(const Graph& graph, const GroupSpec& group) {
  ConstructionVerdict v;
  v.vertices = graph.n();
  v.edges = graph.edge_count();
  v.group_order = group_order(group);
  v.aut_order = automorphisms(graph).order;
  v.isomorphic = v.aut_order == v.group_order && has_automorphism_group(graph, realize(group));
  return v;
}

std::vector<Check> check_constructions() {
  struct Row {
    const char* label;
    const char* name;
    std::vector<std::string> params;
    int vertices;
    int edges;  // -1 when no edge count is claimed
  };
  const std::vector<Row> rows = {
      {"gamma1", "gamma1", {}, 16, 52},      {"gamma2", "gamma2", {}, 18, 99},
      {"gamma3", "gamma3", {}, 27, 171},     {"gamma4", "gamma4", {}, 26, -1},
      {"figure1_c4", "figure1", {}, 10, 20}, {"g16_graph", "g16", {}, 18, -1},
      {"gprime16_graph", "gprime16", {}, 18, -1}, {"a4_graph", "a4", {}, 16, -1},
      {"dicq_graph(3)", "dicq", {"3"}, 17, -1}, {"dicq_graph(5)", "dicq", {"5"}, 23, -1},
      {"dic6_graph", "dic6", {}, 25, -1},    {"q8c3_graph", "q8c3", {}, 25, -1},
      {"q2r_c2_graph(3)", "q2r-c2", {"3"}, 18, -1}, {"gamma_r_plus_2(3)", "gamma-r2", {"3"}, 22, -1},
      {"c2_cubed_graph", "c2cubed", {}, 6, -1}, {"c3_graph", "c3", {}, 9, -1},
  };
  std::vector<Check> out;
  for (const auto& row : rows) {
    auto built = build_construction(row.name, row.params);
    auto v = verify_construction(built.graph, built.group);
    const int e = row.edges >= 0 ? v.edges : -1;
    out.push_back(make("constructions", row.label, summary(row.vertices, row.edges, v.group_order, true),
                       summary(v.vertices, e, v.aut_order, v.isomorphic)));
  }
  // The generator of Aut(figure1_c4), 1-based: (1 2)(3 4 5 6)(7 8 9 10).
  const Permutation gen = Permutation::from_cycles(10, {{0, 1}, {2, 3, 4, 5}, {6, 7, 8, 9}});
  const Graph f = figure1_c4();
  out.push_back(make("constructions", "figure1_c4 generator", "automorphism of order 4",
                     is_automorphism(f, gen) && automorphisms(f).order == 4 ? "automorphism of order 4"
                                                                            : "not a generator"));
  return out;
}

std::vector<Check> check_exceptional_list() {
  const long long expected[] = {18, 21, 25, 23, 12, 18, 20, 30, 13, 20, 17, 23, 25, 18, 16, 18, 25};
  std::vector<Check> out;
  for (int k = 1; k <= 17; ++k) {
    auto r = alpha(table1_spec(k));
    out.push_back(make("exceptional list", "alpha(" + table1_name(k) + ")", std::to_string(expected[k - 1]),
                       text(r.exact)));
    if (r.witness) {
      const bool ok = r.witness->n() == expected[k - 1] && r.witness_verified == std::optional<bool>(true);
      out.push_back(make("exceptional list", table1_name(k) + " witness", "verified", ok ? "verified" : "failed"));
    }
  }
  return out;
}

std::vector<Check> check_abelian_table() {
  struct Cell {
    std::vector<long long> factors;
    long long value;
  };
  std::vector<Cell> cells;
  const long long cols2[] = {2, 3, 4, 5, 7, 8};
  const long long two[4][6] = {
      {4, 11, 12, 17, 16, 16}, {0, 18, 18, 21, 23, 22}, {0, 0, 20, 25, 24, 24}, {0, 0, 0, 30, 29, 29}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (two[i][j]) cells.push_back({{i + 2LL, cols2[j]}, two[i][j]});
    }
  }
  const long long cols3[] = {2, 3, 4, 5, 7, 8, 9, 11, 13};
  const long long three[3][9] = {{6, 13, 14, 19, 18, 18, 19, 26, 30},
                                 {0, 20, 20, 23, 25, 24, 23, 33, 37},
                                 {0, 0, 22, 27, 26, 26, 26, 34, 38}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 9; ++j) {
      if (three[i][j]) cells.push_back({{2, i + 2LL, cols3[j]}, three[i][j]});
    }
  }
  std::vector<Check> out;
  for (const auto& cell : cells) {
    std::string name = "alpha(";
    for (std::size_t i = 0; i < cell.factors.size(); ++i) {
      name += (i ? " x C" : "C") + std::to_string(cell.factors[i]);
    }
    name += ")";
    out.push_back(make("abelian table", name, std::to_string(cell.value),
                       text(exact_alpha(GroupSpec::abelian(cell.factors)))));
  }
  return out;
}

std::vector<Check> check_cyclic_formula() {
  const std::pair<long long, long long> rows[] = {{2, 2}, {3, 9}, {4, 10}, {5, 15}, {7, 14}, {9, 15}, {8, 14}};
  std::vector<Check> out;
  for (auto [n, value] : rows) {
    out.push_back(make("cyclic formula", "alpha(C" + std::to_string(n) + ")", std::to_string(value),
                       text(exact_alpha(GroupSpec::cyclic(n)))));
  }
  return out;
}

std::vector<Check> check_quaternion_formulas() {
  std::vector<Check> out;
  for (int r = 3; r <= 4; ++r) {
    const long long n = 1LL << r;
    const GroupSpec q = GroupSpec::gen_quaternion(n);
    const GroupSpec qc = quaternion_times(r, GroupSpec::cyclic(2));
    for (const auto& [spec, value] : {std::pair{q, 2 * n}, std::pair{qc, 2 * n + 2}}) {
      auto a = alpha(spec);
      out.push_back(make("quaternion formulas", "alpha(" + to_string(spec) + ")", std::to_string(value),
                         text(a.exact)));
      const bool ok = a.witness && a.witness->n() == value && a.witness_verified == std::optional<bool>(true);
      out.push_back(make("quaternion formulas", to_string(spec) + " witness", "verified",
                         ok ? "verified" : "failed"));
    }
  }
  return out;
}

std::vector<Check> check_equality_cases() {
  std::set<std::string> attaining;
  std::set<std::string> bound_violations;
  for (const auto& spec : catalog_specs(32)) {
    auto r = alpha(spec, {false, false});
    const PermGroup g = realize(spec);
    const Classification c = classify(g);
    const long long n = r.order;
    const bool small_cyclic = c.is_cyclic && n >= 3 && n <= 5;
    if (!small_cyclic && r.upper > 2 * n) bound_violations.insert(to_string(spec));
    if (!r.exact || *r.exact != 2 * n) continue;
    if (c.is_gen_quaternion) {
      attaining.insert("Q" + std::to_string(n));
    } else if (c.is_cyclic) {
      attaining.insert("C" + std::to_string(n));
    } else if (c.is_abelian) {
      std::string name;
      for (long long q : abelian_invariants(g)) name += (name.empty() ? "C" : "xC") + std::to_string(q);
      attaining.insert(name);
    } else {
      attaining.insert(to_string(spec));
    }
  }
  auto join = [](const std::set<std::string>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
    return out;
  };
  const std::set<std::string> expected = {"Q8",  "Q16", "Q32", "C7",  "C11", "C13",
                                          "C17", "C19", "C23", "C29", "C31", "C3xC3"};
  return {make("equality cases", "groups with alpha = 2|G|, order <= 32", join(expected), join(attaining)),
          make("equality cases", "upper <= 2|G| outside C3, C4, C5", "", join(bound_violations))};
}

std::vector<Check> check_dicyclic_example() {
  const GroupSpec spec = GroupSpec::dicyclic(7);
  const PermGroup g = realize(spec);
  const DicyclicParts parts = dicyclic_parts(g);
  const int formula = dicyclic_vertex_formula(g.order(), parts.r, parts.k);
  const auto v = verify_construction(parts.graph, spec);
  return {make("dicyclic construction", "Dic7 vertex count", std::to_string(formula), std::to_string(v.vertices)),
          make("dicyclic construction", "Dic7 vertex count at most 28", "yes", v.vertices <= 28 ? "yes" : "no"),
          make("dicyclic construction", "Dic7 automorphism group", summary(v.vertices, -1, 28, true),
               summary(v.vertices, -1, v.aut_order, v.isomorphic))};
}

std::vector<Check> check_small_grr() {
  std::vector<Check> out;
  for (const char* text : {"dihedral:6", "dihedral:8", "dihedral:10", "quaternion:8", "abelian:2x2"}) {
    auto r = find_grr(realize(parse_group_spec(text)));
    out.push_back(make("grr", std::string("no GRR for ") + text, "completed_negative", to_string(r.status)));
  }
  for (const char* text : {"dihedral:12", "dihedral:14"}) {
    const PermGroup g = realize(parse_group_spec(text));
    auto r = find_grr(g);
    std::string actual = to_string(r.status);
    if (r.status == GrrStatus::found) {
      const Graph c = cayley_graph(g, r.connection_set);
      actual += has_automorphism_group(c, g) ? ", verified" : ", wrong group";
    }
    out.push_back(make("grr", std::string("GRR for ") + text, "found, verified", actual));
  }
  return out;
}

std::vector<Check> check_small_searches() {
  std::vector<Check> out;
  for (auto [text, n] : {std::pair{"cyclic:2", 2}, std::pair{"abelian:2x2", 4}, std::pair{"abelian:2x2x2", 6}}) {
    const PermGroup g = realize(parse_group_spec(text));
    auto r = min_realization(g, n);
    std::string actual = r.found ? "found at " + std::to_string(r.found_n) : "absent";
    actual += ", absent up to " + std::to_string(r.certified_absent_up_to);
    out.push_back(make("search", std::string("least realization of ") + text,
                       "found at " + std::to_string(n) + ", absent up to " + std::to_string(n - 1), actual));
  }
  auto c3 = min_realization(realize(GroupSpec::cyclic(3)), 8);
  out.push_back(make("search", "no graph on at most 8 vertices realizes cyclic:3", "absent up to 8",
                     (c3.found ? std::string("found at ") + std::to_string(c3.found_n) : std::string("absent")) +
                         " up to " + std::to_string(c3.certified_absent_up_to)));
  return out;
}

std::vector<Check> verify_all() {
  using Section = std::vector<Check> (*)();
  const Section sections[] = {check_constructions,       check_exceptional_list, check_abelian_table,
                              check_cyclic_formula,      check_quaternion_formulas, check_equality_cases,
                              check_dicyclic_example,    check_small_grr,        check_small_searches};
  std::vector<std::future<std::vector<Check>>> futures;
  for (Section s : sections) futures.push_back(std::async(std::launch::async, s));
  std::vector<Check> out;
  for (auto& f : futures) {
    auto part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace autograph
