#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "json.hpp"

#include "autograph/alpha.hpp"
#include "autograph/aut.hpp"
#include "autograph/cayley.hpp"
#include "autograph/classify.hpp"
#include "autograph/error.hpp"
#include "autograph/search.hpp"
#include "autograph/verify.hpp"

using namespace autograph;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

ordered_json big(const BigInt& v) {
  if (v <= std::numeric_limits<long long>::max()) return static_cast<long long>(v);
  return v.str();
}

// Accumulates the report of one command and prints it at the end.
class Report {
 public:
  explicit Report(std::string command) : start_(std::chrono::steady_clock::now()) {
    doc_["command"] = std::move(command);
    doc_["inputs"] = ordered_json::object();
    doc_["results"] = ordered_json::object();
    doc_["verdicts"] = ordered_json::array();
  }
  ordered_json& inputs() { return doc_["inputs"]; }
  ordered_json& results() { return doc_["results"]; }
  void verdict(const std::string& check, bool pass, const std::string& detail = {}) {
    ordered_json v{{"check", check}, {"pass", pass}};
    if (!detail.empty()) v["detail"] = detail;
    doc_["verdicts"].push_back(std::move(v));
    pass_ = pass_ && pass;
  }
  bool pass() const { return pass_; }
  int finish(bool json) {
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    doc_["pass"] = pass_;
    doc_["timing"] = {{"wall_seconds", seconds}};
    if (json) {
      std::cout << doc_.dump(2) << "\n";
    } else {
      print_text(seconds);
    }
    return pass_ ? kExitPass : kExitFail;
  }

 private:
  static std::string scalar(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  void print_text(double seconds) const {
    for (const auto& [key, value] : doc_["results"].items()) {
      if (value.is_array() && !value.empty() && value.front().is_object()) continue;
      std::cout << key << ": " << scalar(value) << "\n";
    }
    for (const auto& v : doc_["verdicts"]) {
      std::cout << (v["pass"].get<bool>() ? "PASS " : "FAIL ") << v["check"].get<std::string>();
      if (v.contains("detail")) std::cout << " (" << v["detail"].get<std::string>() << ")";
      std::cout << "\n";
    }
    std::cout << (pass_ ? "verdict: pass" : "verdict: fail") << "  [" << seconds << " s]\n";
  }

  std::chrono::steady_clock::time_point start_;
  ordered_json doc_;
  bool pass_ = true;
};

void write_graph6(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write " + path);
  out << to_graph6(g) << "\n";
}

ordered_json orbits_json(const std::vector<std::vector<int>>& orbits) {
  ordered_json out = ordered_json::array();
  for (const auto& orbit : orbits) {
    ordered_json o = ordered_json::array();
    for (int v : orbit) o.push_back(v + 1);
    out.push_back(std::move(o));
  }
  return out;
}

// Graph fields shared by several commands; verdict on Aut = group when the
// engine can handle the graph.
void describe_graph(Report& report, const Graph& g, const GroupSpec* group) {
  report.results()["graph6"] = to_graph6(g);
  report.results()["vertices"] = g.n();
  report.results()["edges"] = g.edge_count();
  if (g.n() > kMaxAutVertices) {
    report.results()["aut_order"] = nullptr;
    return;
  }
  const auto v = group ? verify_construction(g, *group) : ConstructionVerdict{};
  const BigInt order = group ? v.aut_order : automorphisms(g).order;
  report.results()["aut_order"] = big(order);
  if (group) {
    report.results()["group"] = to_string(*group);
    report.results()["group_order"] = big(v.group_order);
    report.results()["isomorphic"] = v.isomorphic;
    report.verdict("automorphism group is " + to_string(*group), v.isomorphic);
  }
}

int cmd_alpha(const std::string& spec_text, const std::string& witness_path, bool json) {
  Report report("alpha");
  report.inputs()["group"] = spec_text;
  const GroupSpec spec = parse_group_spec(spec_text);
  const AlphaResult r = alpha(spec);
  auto& out = report.results();
  out["group"] = to_string(spec);
  out["order"] = r.order;
  out["tag"] = to_string(r.tag);
  out["exact"] = r.exact ? ordered_json(*r.exact) : ordered_json(nullptr);
  out["lower"] = r.lower;
  out["upper"] = r.upper;
  out["witness"] = r.witness ? ordered_json(to_graph6(*r.witness)) : ordered_json(nullptr);
  out["witness_vertices"] = r.witness ? ordered_json(r.witness->n()) : ordered_json(nullptr);
  out["witness_verified"] = r.witness_verified ? ordered_json(*r.witness_verified) : ordered_json(nullptr);
  out["provenance"] = r.provenance;
  if (r.witness_verified) report.verdict("witness realizes the group", *r.witness_verified);
  if (r.witness) report.verdict("witness within the upper bound", r.witness->n() <= r.upper);
  if (!witness_path.empty()) {
    if (!r.witness) throw ParameterError("no witness available for " + to_string(spec));
    write_graph6(witness_path, *r.witness);
  }
  return report.finish(json);
}

int cmd_aut(const std::string& graph6, const std::string& group_text, bool json) {
  Report report("aut");
  report.inputs()["graph6"] = graph6;
  const Graph g = from_graph6(graph6);
  const AutResult a = automorphisms(g);
  auto& out = report.results();
  out["vertices"] = g.n();
  out["edges"] = g.edge_count();
  out["aut_order"] = big(a.order);
  ordered_json gens = ordered_json::array();
  for (const auto& p : a.generators) gens.push_back(p.to_cycle_string(1));
  out["generators"] = gens;
  out["orbits"] = orbits_json(a.orbits);
  if (!group_text.empty()) {
    report.inputs()["group"] = group_text;
    const GroupSpec spec = parse_group_spec(group_text);
    report.verdict("automorphism group is " + to_string(spec), has_automorphism_group(g, realize(spec)));
  }
  return report.finish(json);
}

int cmd_grr(const std::string& spec_text, long long budget, int workers, const std::string& witness_path,
            bool json) {
  Report report("grr");
  report.inputs()["group"] = spec_text;
  report.inputs()["budget"] = budget;
  const GroupSpec spec = parse_group_spec(spec_text);
  const PermGroup g = realize(spec);
  GrrSearchOptions o;
  o.budget = budget;
  o.workers = workers;
  const GrrSearchResult r = find_grr(g, o);
  const bool predicted = classify(g).has_grr;
  auto& out = report.results();
  out["group"] = to_string(spec);
  out["order"] = g.order();
  out["status"] = to_string(r.status);
  out["examined"] = r.examined;
  out["classification_predicts_grr"] = predicted;
  report.verdict("search completed", r.status != GrrStatus::budget_exhausted);
  if (r.status == GrrStatus::found) {
    ordered_json words = ordered_json::array();
    for (int x : r.connection_set) words.push_back(g.word(x));
    out["connection_set"] = words;
    out["first_hit_index"] = r.first_hit_index;
    const Graph c = cayley_graph(g, r.connection_set);
    describe_graph(report, c, &spec);
    if (!witness_path.empty()) write_graph6(witness_path, c);
  }
  if (r.status != GrrStatus::budget_exhausted) {
    report.verdict("agrees with the classification", predicted == (r.status == GrrStatus::found));
  }
  return report.finish(json);
}

int cmd_construct(const std::string& name, const std::vector<std::string>& params,
                  const std::string& witness_path, bool json) {
  Report report("construct");
  report.inputs()["name"] = name;
  report.inputs()["params"] = params;
  const NamedConstruction c = build_construction(name, params);
  describe_graph(report, c.graph, &c.group);
  if (!witness_path.empty()) write_graph6(witness_path, c.graph);
  return report.finish(json);
}

int cmd_search(const std::string& spec_text, int nmax, const std::string& mode, const std::string& checkpoint,
               int workers, const std::string& witness_path, bool json) {
  Report report("search");
  report.inputs()["group"] = spec_text;
  report.inputs()["nmax"] = nmax;
  report.inputs()["mode"] = mode;
  const GroupSpec spec = parse_group_spec(spec_text);
  const PermGroup g = realize(spec);
  SearchOptions o;
  o.mode = parse_search_mode(mode);
  o.workers = workers;
  o.checkpoint_path = checkpoint;
  const SearchReport r = min_realization(g, nmax, o);
  auto& out = report.results();
  out["target"] = to_string(spec);
  out["n_max"] = r.n_max;
  out["mode"] = to_string(r.mode);
  out["found"] = r.found ? ordered_json(to_graph6(*r.found)) : ordered_json(nullptr);
  out["found_n"] = r.found ? ordered_json(r.found_n) : ordered_json(nullptr);
  out["certified_absent_up_to"] = r.certified_absent_up_to;
  out["graphs_examined"] = r.graphs_examined;
  out["search_seconds"] = r.wall_time_seconds;
  if (r.found) {
    report.verdict("found graph realizes the group", has_automorphism_group(*r.found, g));
    if (!witness_path.empty()) write_graph6(witness_path, *r.found);
  }
  return report.finish(json);
}

int cmd_verify_paper(bool json) {
  Report report("verify-paper");
  const auto checks = verify_all();
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) {
    list.push_back({{"section", c.section}, {"name", c.name}, {"expected", c.expected}, {"actual", c.actual},
                    {"pass", c.pass}});
    report.verdict(c.section + ": " + c.name, c.pass, c.pass ? "" : "expected " + c.expected + ", got " + c.actual);
  }
  report.results()["checks"] = list;
  report.results()["total"] = checks.size();
  report.results()["passed"] = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  return report.finish(json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphs with a prescribed automorphism group"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable report");
  std::string witness;
  std::string spec;

  auto* alpha_cmd = app.add_subcommand("alpha", "Least vertex count of a graph with the given group");
  alpha_cmd->add_option("group", spec, "Group spec, e.g. dicyclic:5")->required();
  alpha_cmd->add_option("--witness", witness, "Write the witness graph6 here");

  std::string graph6;
  std::string expect;
  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group of a graph6 graph");
  aut_cmd->add_option("graph6", graph6, "Graph in graph6")->required();
  aut_cmd->add_option("--group", expect, "Also check Aut against this group spec");

  long long budget = GrrSearchOptions{}.budget;
  int workers = 1;
  auto* grr_cmd = app.add_subcommand("grr", "Search for a graphical regular representation");
  grr_cmd->add_option("group", spec, "Group spec")->required();
  grr_cmd->add_option("--budget", budget, "Connection sets to try")->check(CLI::PositiveNumber);
  grr_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  grr_cmd->add_option("--witness", witness, "Write the Cayley graph6 here");

  std::string name;
  std::vector<std::string> params;
  auto* construct_cmd = app.add_subcommand("construct", "Build a named graph and verify its group");
  construct_cmd->add_option("name", name, "Construction name")
      ->required()
      ->check(CLI::IsMember(construction_names()));
  construct_cmd->add_option("params", params, "Construction parameters");
  construct_cmd->add_option("--witness", witness, "Write the graph6 here");

  int nmax = 0;
  std::string mode = "iso";
  std::string checkpoint;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for a least realization");
  search_cmd->add_option("group", spec, "Group spec")->required();
  search_cmd->add_option("--nmax", nmax, "Largest vertex count")->required();
  search_cmd->add_option("--mode", mode, "labeled or iso")->check(CLI::IsMember({"labeled", "iso"}));
  search_cmd->add_option("--checkpoint", checkpoint, "State file for labeled mode");
  search_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--witness", witness, "Write the found graph6 here");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Rerun every claim in the suite");

  for (auto* sub : {alpha_cmd, aut_cmd, grr_cmd, construct_cmd, search_cmd, verify_cmd}) {
    sub->add_flag("--json", json, "Machine-readable report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*alpha_cmd) return cmd_alpha(spec, witness, json);
    if (*aut_cmd) return cmd_aut(graph6, expect, json);
    if (*grr_cmd) return cmd_grr(spec, budget, workers, witness, json);
    if (*construct_cmd) return cmd_construct(name, params, witness, json);
    if (*search_cmd) return cmd_search(spec, nmax, mode, checkpoint, workers, witness, json);
    if (*verify_cmd) return cmd_verify_paper(json);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const HypothesisError& e) {
    std::cerr << "error: hypothesis " << e.clause() << " fails: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
