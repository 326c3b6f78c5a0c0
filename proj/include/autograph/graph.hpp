#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autograph/permutation.hpp"

namespace autograph {

// Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
// Optional display labels (e.g. "3'" or "2''") are carried for output only
// and do not take part in comparisons.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int words() const { return words_; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const {
    check(u);
    check(v);
    return (rows_[idx(u) + static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<const std::uint64_t> row(int v) const {
    return {rows_.data() + idx(v), static_cast<std::size_t>(words_)};
  }

  int degree(int v) const;
  std::vector<int> degree_sequence() const;  // ascending
  int edge_count() const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  void set_label(int v, std::string label);
  // Display label; defaults to the 1-based vertex number.
  std::string label(int v) const;
  bool has_labels() const { return !labels_.empty(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check(int v) const;
  std::size_t idx(int v) const { return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_); }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

Graph complement(const Graph& g);
// Vertices of b follow those of a; labels are kept.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
// Vertex v of g becomes vertex p(v) of the result.
Graph relabel(const Graph& g, const Permutation& p);
bool is_automorphism(const Graph& g, const Permutation& p);
// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);

std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and surrounding whitespace.
Graph from_graph6(std::string_view text);
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace autograph
