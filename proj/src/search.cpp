#include "autograph/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "autograph/aut.hpp"
#include "autograph/error.hpp"
#include "autograph/group_theory.hpp"

namespace autograph {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- iso classes ----------------------------------------------------------

// Children of parent on one more vertex, one per isomorphism class among
// those whose canonical deletion vertex can be the new vertex. Returns false
// when the visitor stopped.
bool for_each_child(const Graph& parent, const std::function<bool(const Graph&)>& visit) {
  const int n = parent.n() + 1;
  const int v = n - 1;
  Graph base(n);
  for (auto [a, b] : parent.edges()) base.add_edge(a, b);
  std::set<std::string> seen;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    Graph child = base;
    for (int u = 0; u < n - 1; ++u) {
      if ((mask >> u) & 1u) child.add_edge(u, v);
    }
    auto cl = canonical_labeling(child);
    int last = -1;
    for (int u = 0; u < n; ++u) {
      if (cl.labeling(u) == n - 1) last = u;
    }
    bool accepted = false;
    for (const auto& orbit : cl.aut.orbits) {
      if (std::binary_search(orbit.begin(), orbit.end(), v)) {
        accepted = std::binary_search(orbit.begin(), orbit.end(), last);
        break;
      }
    }
    if (!accepted) continue;
    if (!seen.insert(to_graph6(cl.form)).second) continue;
    if (!visit(child)) return false;
  }
  return true;
}

void check_iso_n(int n) {
  if (n < 1 || n > kMaxIsoN) {
    throw ParameterError("iso-class enumeration supports 1 <= n <= " + std::to_string(kMaxIsoN));
  }
}

// levels[k] holds the classes on k + 1 vertices.
std::vector<std::vector<Graph>> iso_levels(int n) {
  std::vector<std::vector<Graph>> levels{{Graph(1)}};
  while (static_cast<int>(levels.size()) < n) {
    std::vector<Graph> next;
    for (const auto& p : levels.back()) {
      for_each_child(p, [&](const Graph& c) {
        next.push_back(c);
        return true;
      });
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

// ---- labeled mode ---------------------------------------------------------

constexpr long long kChunk = 1 << 16;

struct Checkpoint {
  int n = 1;
  long long next_mask = 0;
  long long examined = 0;
  std::string found_graph6;
};

nlohmann::json target_signature(const PermGroup& target) {
  std::vector<int> orders = target.element_orders();
  std::sort(orders.begin(), orders.end());
  return {{"order", target.order()}, {"element_orders", orders}};
}

std::optional<Checkpoint> load_checkpoint(const std::string& path, const PermGroup& target,
                                          const SearchReport& report) {
  if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    throw ParameterError("checkpoint file " + path + " is not valid JSON");
  }
  if (j.value("target", nlohmann::json()) != target_signature(target) ||
      j.value("mode", "") != to_string(report.mode) || j.value("n_max", -1) != report.n_max) {
    throw ParameterError("checkpoint file " + path + " belongs to a different search");
  }
  Checkpoint c;
  c.n = j.at("n").get<int>();
  c.next_mask = j.at("next_mask").get<long long>();
  c.examined = j.at("examined").get<long long>();
  c.found_graph6 = j.value("found_graph6", "");
  return c;
}

void save_checkpoint(const std::string& path, const PermGroup& target, const SearchReport& report,
                     const Checkpoint& c) {
  if (path.empty()) return;
  nlohmann::json j = {{"target", target_signature(target)},
                      {"mode", to_string(report.mode)},
                      {"n_max", report.n_max},
                      {"n", c.n},
                      {"next_mask", c.next_mask},
                      {"examined", c.examined}};
  if (!c.found_graph6.empty()) j["found_graph6"] = c.found_graph6;
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

// sums[c] is true when c vertices can be split into orbits of the target.
std::vector<char> orbit_size_sums(const PermGroup& target, int n) {
  std::vector<char> sums(static_cast<std::size_t>(n + 1), 0);
  sums[0] = 1;
  std::set<int> sizes;
  for (const auto& h : subgroup_class_representatives(target)) {
    sizes.insert(target.order() / static_cast<int>(h.size()));
  }
  for (int c = 1; c <= n; ++c) {
    for (int s : sizes) {
      if (s <= c && sums[static_cast<std::size_t>(c - s)]) sums[static_cast<std::size_t>(c)] = 1;
    }
  }
  return sums;
}

Graph graph_of_mask(int n, long long mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

void labeled_search(const PermGroup& target, const SearchOptions& options, SearchReport& report) {
  Checkpoint state;
  if (auto c = load_checkpoint(options.checkpoint_path, target, report)) state = *c;
  if (!state.found_graph6.empty()) {
    report.found = from_graph6(state.found_graph6);
    report.found_n = state.n;
    report.certified_absent_up_to = state.n - 1;
    report.graphs_examined = state.examined;
    return;
  }
  report.certified_absent_up_to = state.n - 1;
  const auto sums = orbit_size_sums(target, report.n_max);
  const int workers = std::max(1, options.workers);
  std::mutex mu;
  long long last_saved = state.examined;

  for (int n = state.n; n <= report.n_max; ++n) {
    const int m = n * (n - 1) / 2;
    const long long total = 1LL << m;
    const long long chunks = (total + kChunk - 1) / kChunk;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    const long long first_chunk = n == state.n ? state.next_mask / kChunk : 0;
    std::atomic<long long> next_chunk{first_chunk};
    std::atomic<long long> examined{state.examined};
    long long best_chunk = chunks;
    long long best_mask = -1;
    std::vector<char> done(static_cast<std::size_t>(chunks), 0);
    long long done_prefix = first_chunk;

    auto scan = [&] {
      std::vector<int> degree(static_cast<std::size_t>(n));
      std::vector<int> count(static_cast<std::size_t>(n));
      for (;;) {
        long long c = next_chunk.fetch_add(1);
        if (c >= chunks) return;
        {
          std::lock_guard lock(mu);
          if (c > best_chunk) return;
        }
        const long long lo = c * kChunk;
        const long long hi = std::min(total, lo + kChunk);
        long long hit = -1;
        long long local = 0;
        for (long long mask = lo; mask < hi; ++mask) {
          ++local;
          // A graph and its complement share Aut; keep the sparser one.
          if (2 * std::popcount(static_cast<unsigned long long>(mask)) > m) continue;
          std::fill(degree.begin(), degree.end(), 0);
          for (int b = 0; b < m; ++b) {
            if ((mask >> b) & 1) {
              ++degree[static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].first)];
              ++degree[static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].second)];
            }
          }
          std::fill(count.begin(), count.end(), 0);
          for (int d : degree) ++count[static_cast<std::size_t>(d)];
          bool ok = true;
          for (int k : count) ok = ok && sums[static_cast<std::size_t>(k)];
          if (!ok) continue;
          if (has_automorphism_group(graph_of_mask(n, mask), target)) {
            hit = mask;
            break;
          }
        }
        examined += local;
        std::lock_guard lock(mu);
        if (hit >= 0 && c < best_chunk) {
          best_chunk = c;
          best_mask = hit;
        }
        done[static_cast<std::size_t>(c)] = 1;
        while (done_prefix < chunks && done[static_cast<std::size_t>(done_prefix)]) ++done_prefix;
        if (examined - last_saved >= options.checkpoint_interval) {
          last_saved = examined;
          save_checkpoint(options.checkpoint_path, target, report,
                          {n, done_prefix * kChunk, examined.load(), ""});
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(scan);
    scan();
    for (auto& t : pool) t.join();

    state = {n + 1, 0, examined.load(), ""};
    if (best_mask >= 0) {
      report.found = graph_of_mask(n, best_mask);
      report.found_n = n;
      report.certified_absent_up_to = n - 1;
      report.graphs_examined = examined;
      save_checkpoint(options.checkpoint_path, target, report,
                      {n, 0, examined.load(), to_graph6(*report.found)});
      return;
    }
    report.certified_absent_up_to = n;
    save_checkpoint(options.checkpoint_path, target, report, state);
  }
  report.graphs_examined = state.examined;
}

void iso_search(const PermGroup& target, const SearchOptions& options, SearchReport& report) {
  std::vector<Graph> parents;
  const int workers = std::max(1, options.workers);
  for (int n = 1; n <= report.n_max; ++n) {
    if (n == 1) {
      ++report.graphs_examined;
      if (has_automorphism_group(Graph(1), target)) {
        report.found = Graph(1);
        report.found_n = 1;
        return;
      }
      parents = {Graph(1)};
      report.certified_absent_up_to = 1;
      continue;
    }
    // Workers take parents in order; the hit with the least parent index
    // wins, so the result does not depend on the worker count.
    const bool keep = n < report.n_max;
    std::vector<std::vector<Graph>> children(keep ? parents.size() : 0);
    std::atomic<std::size_t> next{0};
    std::atomic<long long> examined{0};
    std::mutex mu;
    std::size_t best_parent = parents.size();
    std::optional<Graph> best;
    auto work = [&] {
      for (;;) {
        std::size_t p = next.fetch_add(1);
        if (p >= parents.size()) return;
        {
          std::lock_guard lock(mu);
          if (p > best_parent) return;
        }
        std::optional<Graph> hit;
        for_each_child(parents[p], [&](const Graph& c) {
          ++examined;
          if (keep) children[p].push_back(c);
          if (has_automorphism_group(c, target)) {
            hit = c;
            return false;
          }
          return true;
        });
        if (hit) {
          std::lock_guard lock(mu);
          if (p < best_parent) {
            best_parent = p;
            best = hit;
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    report.graphs_examined += examined;
    if (best) {
      report.found = best;
      report.found_n = n;
      report.certified_absent_up_to = n - 1;
      return;
    }
    report.certified_absent_up_to = n;
    std::vector<Graph> next_level;
    for (auto& c : children) {
      for (auto& g : c) next_level.push_back(std::move(g));
    }
    parents = std::move(next_level);
  }
}

// ---- actions --------------------------------------------------------------

struct Action {
  std::vector<Permutation> generators;
  std::vector<std::vector<std::pair<int, int>>> orbitals;
};

std::vector<std::vector<std::pair<int, int>>> pair_orbits(int n, const std::vector<Permutation>& gens) {
  std::vector<int> id(static_cast<std::size_t>(n * n), -1);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (id[static_cast<std::size_t>(i * n + j)] >= 0) continue;
      const int k = static_cast<int>(out.size());
      out.emplace_back();
      std::vector<std::pair<int, int>> stack{{i, j}};
      id[static_cast<std::size_t>(i * n + j)] = k;
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        out.back().emplace_back(a, b);
        for (const auto& g : gens) {
          int x = std::min(g(a), g(b));
          int y = std::max(g(a), g(b));
          if (id[static_cast<std::size_t>(x * n + y)] < 0) {
            id[static_cast<std::size_t>(x * n + y)] = k;
            stack.emplace_back(x, y);
          }
        }
      }
    }
  }
  return out;
}

// Faithful actions of g on n points, as sums of coset actions on subgroup
// class representatives, fewest pair orbits first.
std::vector<Action> faithful_actions(const PermGroup& g, int n) {
  const auto reps = subgroup_class_representatives(g);
  const int order = g.order();
  std::vector<std::vector<char>> core(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::vector<char> in(static_cast<std::size_t>(order), 0);
    for (int e : reps[i]) in[static_cast<std::size_t>(e)] = 1;
    core[i].assign(static_cast<std::size_t>(order), 1);
    for (int x = 0; x < order; ++x) {
      for (int e = 0; e < order; ++e) {
        if (!in[static_cast<std::size_t>(g.conjugate(e, x))]) core[i][static_cast<std::size_t>(e)] = 0;
      }
    }
  }
  std::vector<Action> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int, std::vector<char>)> rec = [&](std::size_t from, int left,
                                                                      std::vector<char> kernel) {
    if (left == 0) {
      if (std::count(kernel.begin(), kernel.end(), 1) != 1) return;
      std::vector<std::vector<int>> images(g.generator_indices().size());
      int offset = 0;
      for (std::size_t i : chosen) {
        auto perms = coset_action(g, reps[i]);
        for (std::size_t t = 0; t < perms.size(); ++t) {
          for (int p : perms[t].images()) images[t].push_back(p + offset);
        }
        offset += perms.empty() ? order / static_cast<int>(reps[i].size()) : perms[0].degree();
      }
      Action a;
      for (auto& im : images) a.generators.emplace_back(std::move(im));
      if (a.generators.empty()) a.generators.push_back(Permutation::identity(n));
      a.orbitals = pair_orbits(n, a.generators);
      out.push_back(std::move(a));
      return;
    }
    for (std::size_t i = from; i < reps.size(); ++i) {
      const int index = order / static_cast<int>(reps[i].size());
      if (index > left) continue;
      std::vector<char> k = kernel;
      for (std::size_t e = 0; e < k.size(); ++e) k[e] = k[e] && core[i][e];
      chosen.push_back(i);
      rec(i, left - index, std::move(k));
      chosen.pop_back();
    }
  };
  rec(0, n, std::vector<char>(static_cast<std::size_t>(order), 1));
  std::stable_sort(out.begin(), out.end(), [](const Action& a, const Action& b) {
    return a.orbitals.size() < b.orbitals.size();
  });
  return out;
}

}  // namespace

std::string to_string(SearchMode mode) {
  return mode == SearchMode::labeled_bruteforce ? "labeled_bruteforce" : "iso_classes";
}

SearchMode parse_search_mode(const std::string& text) {
  if (text == "labeled" || text == "labeled_bruteforce") return SearchMode::labeled_bruteforce;
  if (text == "iso" || text == "iso_classes") return SearchMode::iso_classes;
  throw ParameterError("unknown search mode '" + text + "' (expected labeled or iso)");
}

bool has_automorphism_group(const Graph& g, const PermGroup& target) {
  AutOptions o;
  o.max_order = target.order();
  auto r = automorphisms(g, o);
  if (r.order_exceeded || r.order != target.order()) return false;
  auto gens = r.generators;
  if (gens.empty()) gens.push_back(Permutation::identity(g.n()));
  return is_isomorphic(PermGroup(g.n(), gens), target);
}

SearchReport min_realization(const PermGroup& target, int n_max, const SearchOptions& options) {
  const int limit = options.mode == SearchMode::labeled_bruteforce ? kMaxLabeledN : kMaxIsoN;
  if (n_max < 1 || n_max > limit) {
    throw ParameterError(to_string(options.mode) + " search supports 1 <= n_max <= " + std::to_string(limit));
  }
  const auto start = Clock::now();
  SearchReport report;
  report.n_max = n_max;
  report.mode = options.mode;
  if (options.mode == SearchMode::labeled_bruteforce) {
    labeled_search(target, options, report);
  } else {
    iso_search(target, options, report);
  }
  report.wall_time_seconds = seconds_since(start);
  return report;
}

std::optional<Graph> find_with_aut(const PermGroup& target, int n) {
  if (n < 1) throw ParameterError("find_with_aut needs n >= 1");
  for (const auto& action : faithful_actions(target, n)) {
    const int k = static_cast<int>(action.orbitals.size());
    if (k > 30) throw LimitError("find_with_aut: an action has " + std::to_string(k) + " pair orbits (limit 30)");
    // Complementary unions share Aut, so the last orbit is never chosen.
    const std::uint32_t count = k == 0 ? 1u : (1u << (k - 1));
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      Graph g(n);
      for (int b = 0; b < k; ++b) {
        if ((mask >> b) & 1u) {
          for (auto [x, y] : action.orbitals[static_cast<std::size_t>(b)]) g.add_edge(x, y);
        }
      }
      // Aut contains the faithful image of target, so equal orders suffice.
      AutOptions o;
      o.max_order = target.order();
      auto r = automorphisms(g, o);
      if (!r.order_exceeded && r.order == target.order()) return g;
    }
  }
  return std::nullopt;
}

void for_each_iso_class(int n, const std::function<bool(const Graph&)>& visit) {
  check_iso_n(n);
  if (n == 1) {
    visit(Graph(1));
    return;
  }
  const auto levels = iso_levels(n - 1);
  for (const auto& p : levels.back()) {
    if (!for_each_child(p, visit)) return;
  }
}

std::vector<Graph> enumerate_iso_classes(int n) {
  std::vector<Graph> out;
  for_each_iso_class(n, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace autograph
