#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "autograph/graph.hpp"
#include "autograph/perm_group.hpp"

namespace autograph {

enum class SearchMode { labeled_bruteforce, iso_classes };

std::string to_string(SearchMode mode);
// Accepts "labeled" / "labeled_bruteforce" and "iso" / "iso_classes".
SearchMode parse_search_mode(const std::string& text);

constexpr int kMaxLabeledN = 8;
constexpr int kMaxIsoN = 10;

struct SearchOptions {
  SearchMode mode = SearchMode::iso_classes;
  int workers = 1;
  // Labeled mode only: progress is written here every checkpoint_interval
  // graphs and resumed from when the file matches the search.
  std::string checkpoint_path;
  long long checkpoint_interval = 1'000'000;
};

struct SearchReport {
  std::string target;  // free-form name of the target, echoed in reports
  int n_max = 0;
  SearchMode mode = SearchMode::iso_classes;
  std::optional<Graph> found;
  int found_n = 0;
  // No graph on at most this many vertices has Aut isomorphic to the target.
  int certified_absent_up_to = 0;
  long long graphs_examined = 0;
  double wall_time_seconds = 0;
};

// Whether Aut(g) is isomorphic to target.
bool has_automorphism_group(const Graph& g, const PermGroup& target);

// Scans n = 1..n_max and stops at the first n with a graph whose
// automorphism group is isomorphic to target. Throws ParameterError when
// n_max exceeds the mode's limit.
SearchReport min_realization(const PermGroup& target, int n_max, const SearchOptions& options = {});

// A graph on exactly n vertices with Aut isomorphic to target, or nullopt
// when none exists. Enumerates the faithful actions of target on n points
// and the unions of their orbits on vertex pairs, so absence is certified.
// Throws LimitError when an action has more than 30 pair orbits.
std::optional<Graph> find_with_aut(const PermGroup& target, int n);

// One graph per isomorphism class on n vertices, by canonical augmentation.
// The visitor returns false to stop early. n <= kMaxIsoN.
void for_each_iso_class(int n, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> enumerate_iso_classes(int n);

}  // namespace autograph
