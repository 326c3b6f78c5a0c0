#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "autograph/aut.hpp"
#include "autograph/constructions.hpp"
#include "autograph/group_spec.hpp"
#include "autograph/search.hpp"
#include "autograph/verify.hpp"

using namespace autograph;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome from_checks(const std::vector<Check>& checks) {
  Outcome o;
  int failed = 0;
  for (const auto& c : checks) {
    if (c.pass) continue;
    ++failed;
    if (o.detail.size() < 400) o.detail += c.name + ": expected " + c.expected + ", got " + c.actual + "; ";
  }
  o.pass = failed == 0 && !checks.empty();
  o.detail = std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks" +
             (failed ? "; " + o.detail : "");
  return o;
}

std::vector<Check> concat(std::initializer_list<std::vector<Check>> parts) {
  std::vector<Check> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Outcome babai_property() {
  std::vector<Check> checks;
  for (const auto& spec : catalog_specs(32)) {
    const PermGroup g = realize(spec);
    if (g.order() < 6 || g.is_cyclic()) continue;
    const auto v = verify_construction(babai_graph(g), spec);
    std::ostringstream actual;
    actual << "|Aut|=" << v.aut_order << " iso=" << (v.isomorphic ? "yes" : "no");
    std::ostringstream expected;
    expected << "|Aut|=" << g.order() << " iso=yes";
    checks.push_back({"babai", to_string(spec), expected.str(), actual.str(), expected.str() == actual.str()});
  }
  Outcome o = from_checks(checks);
  if (checks.size() < 10) o.pass = false;
  return o;
}

Outcome lower_bounds() {
  std::vector<Check> checks = check_small_searches();
  const auto classes = enumerate_iso_classes(8).size();
  checks.push_back({"search", "isomorphism classes on 8 vertices", "12346", std::to_string(classes),
                    classes == 12346});
  return from_checks(checks);
}

Graph from_mask(int n, unsigned long long mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1ULL) g.add_edge(i, j);
    }
  }
  return g;
}

bool engine_matches_oracle(const Graph& g) {
  const AutResult engine = automorphisms(g);
  const AutResult oracle = automorphisms_bruteforce(g);
  if (engine.order != oracle.order) return false;
  // The oracle lists every non-identity automorphism.
  std::vector<Permutation> all = oracle.generators;
  all.push_back(Permutation::identity(g.n()));
  std::sort(all.begin(), all.end());
  return generated_elements(engine.generators, g.n()) == all;
}

Outcome engine_oracle() {
  long long exhaustive = 0;
  long long mismatches = 0;
  for (int n = 1; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask, ++exhaustive) {
      if (!engine_matches_oracle(from_mask(n, mask))) ++mismatches;
    }
  }
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> size(6, 8);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const long long random_graphs = 10000;
  for (long long t = 0; t < random_graphs; ++t) {
    const int n = size(rng);
    const double p = density(rng);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng) < p) g.add_edge(i, j);
      }
    }
    if (!engine_matches_oracle(g)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(exhaustive) + " exhaustive graphs (n <= 5), " +
                               std::to_string(random_graphs) + " random graphs (6 <= n <= 8), " +
                               std::to_string(mismatches) + " mismatches"};
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "construction verification", 60, [] { return from_checks(check_constructions()); }},
      {2, "Babai construction realizes non-cyclic groups of order 6-32", 120, babai_property},
      {3, "dicyclic construction for Dic7", 300, [] { return from_checks(check_dicyclic_example()); }},
      {4, "table reproduction", 5,
       [] { return from_checks(concat({check_exceptional_list(), check_abelian_table(), check_cyclic_formula()})); }},
      {5, "groups attaining alpha = 2|G| up to order 32", 10, [] { return from_checks(check_equality_cases()); }},
      {6, "lower-bound certification by exhaustive search", 600, lower_bounds},
      {7, "automorphism engine agrees with brute force", 600, engine_oracle},
      {8, "GRR suite", 900, [] { return from_checks(check_small_grr()); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << std::fixed
              << std::setprecision(2) << seconds << " s of " << std::setprecision(0) << c.budget_seconds
              << " s] " << o.detail << (in_time ? "" : " (over time budget)") << std::endl;
  }
  return all ? 0 : 1;
}
