#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "autograph/graph.hpp"
#include "autograph/group_spec.hpp"

namespace autograph {

// One verified claim: the expected and computed values as text.
struct Check {
  std::string section;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// A named builder together with the group its graph should realize.
struct NamedConstruction {
  Graph graph;
  GroupSpec group;
};

// Names: figure1, gamma1..gamma4, gamma-r2 <r>, q2r-c2 <r>, g16, gprime16,
// dicq <q>, dic6, q8c3, a4, c2cubed, c3, babai <spec>, dicyclic <spec>.
// ParameterError for unknown names or bad parameters.
NamedConstruction build_construction(std::string_view name, const std::vector<std::string>& params);
std::vector<std::string> construction_names();

struct ConstructionVerdict {
  int vertices = 0;
  int edges = 0;
  BigInt aut_order = 0;
  BigInt group_order = 0;
  bool isomorphic = false;
};

// Aut(graph) computed by the engine and compared with realize(group).
ConstructionVerdict verify_construction(const Graph& graph, const GroupSpec& group);

// Sections of the claim suite. Each returns its checks in a fixed order.
std::vector<Check> check_constructions();
std::vector<Check> check_exceptional_list();
std::vector<Check> check_abelian_table();
std::vector<Check> check_cyclic_formula();
std::vector<Check> check_quaternion_formulas();
std::vector<Check> check_equality_cases();
std::vector<Check> check_dicyclic_example();
std::vector<Check> check_small_grr();
std::vector<Check> check_small_searches();

// Every section, run concurrently, concatenated in the order above.
std::vector<Check> verify_all();

}  // namespace autograph
