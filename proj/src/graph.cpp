#include "autograph/graph.hpp"

#include <algorithm>
#include <bit>

#include "autograph/error.hpp"

namespace autograph {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw ParameterError("negative vertex count");
  rows_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check(int v) const {
  if (v < 0 || v >= n_) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range for graph on " +
                         std::to_string(n_) + " vertices");
  }
}

void Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw ParameterError("loops are not allowed");
  rows_[idx(u) + static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[idx(v) + static_cast<std::size_t>(u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check(u);
  check(v);
  rows_[idx(u) + static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  rows_[idx(v) + static_cast<std::size_t>(u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const {
  check(v);
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d;
  for (int v = 0; v < n_; ++v) d.push_back(degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

int Graph::edge_count() const {
  int total = 0;
  for (auto w : rows_) total += std::popcount(w);
  return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  check(v);
  std::vector<int> out;
  for (int w = 0; w < n_; ++w) {
    if (has_edge(v, w)) out.push_back(w);
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_label(int v, std::string label) {
  check(v);
  if (labels_.empty()) {
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i + 1));
  }
  labels_[static_cast<std::size_t>(v)] = std::move(label);
}

std::string Graph::label(int v) const {
  check(v);
  return labels_.empty() ? std::to_string(v + 1) : labels_[static_cast<std::size_t>(v)];
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) c.add_edge(u, v);
    }
  }
  if (g.has_labels()) {
    for (int v = 0; v < g.n(); ++v) c.set_label(v, g.label(v));
  }
  return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph u(a.n() + b.n());
  for (auto [x, y] : a.edges()) u.add_edge(x, y);
  for (auto [x, y] : b.edges()) u.add_edge(a.n() + x, a.n() + y);
  if (a.has_labels() || b.has_labels()) {
    for (int v = 0; v < a.n(); ++v) u.set_label(v, a.label(v));
    for (int v = 0; v < b.n(); ++v) u.set_label(a.n() + v, b.label(v));
  }
  return u;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  Graph s(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return s;
}

Graph relabel(const Graph& g, const Permutation& p) {
  if (p.degree() != g.n()) throw ParameterError("relabeling permutation has the wrong degree");
  Graph r(g.n());
  for (auto [u, v] : g.edges()) r.add_edge(p(u), p(v));
  return r;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.n()) return false;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v) != g.has_edge(p(u), p(v))) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> members{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int w : g.neighbors(members[k])) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

// ---------------------------------------------------------------------------
// graph6

std::string to_graph6(const Graph& g) {
  const long long n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) throw ParameterError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParameterError("graph6 byte out of range");
  }
  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > text.size()) throw ParameterError("truncated graph6 header");
    long long v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | (text[pos++] - 63);
    return v;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > 1000000) throw LimitError("graph6 vertex count too large");
  const long long pairs = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos != need) throw ParameterError("graph6 body has the wrong length");
  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6) {
    int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw ParameterError("graph6 padding bits are not zero");
  }
  return g;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (int v = 0; v < g.n(); ++v) {
    std::string label = g.label(v);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped.push_back('\\');
      escaped.push_back(c);
    }
    out += "  " + std::to_string(v) + " [label=\"" + escaped + "\"];\n";
  }
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace autograph
