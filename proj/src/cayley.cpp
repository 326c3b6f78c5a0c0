#include "autograph/cayley.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "autograph/aut.hpp"
#include "autograph/classify.hpp"
#include "autograph/error.hpp"

namespace autograph {

Graph cayley_graph(const PermGroup& g, const ConnectionSet& s) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int x : s) {
    if (x < 0 || x >= g.order()) throw ParameterError("connection set element out of range");
    if (x == g.identity()) throw ParameterError("connection set contains the identity");
    in[static_cast<std::size_t>(x)] = 1;
  }
  for (int x : s) {
    if (!in[static_cast<std::size_t>(g.inv(x))]) throw ParameterError("connection set is not inverse-closed");
  }
  Graph c(g.order());
  for (int x = 0; x < g.order(); ++x) {
    for (int t : s) {
      int y = g.mul(t, x);
      if (x < y) c.add_edge(x, y);
    }
  }
  return c;
}

bool has_grr(const PermGroup& g) { return classify(g).has_grr; }

std::string to_string(GrrStatus status) {
  switch (status) {
    case GrrStatus::found: return "found";
    case GrrStatus::completed_negative: return "completed_negative";
    case GrrStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace {

struct Atom {
  std::vector<int> elements;
};

std::vector<Atom> atoms_of(const PermGroup& g) {
  std::vector<Atom> atoms;
  for (int x = 1; x < g.order(); ++x) {
    int y = g.inv(x);
    if (y < x) continue;
    atoms.push_back(Atom{y == x ? std::vector<int>{x} : std::vector<int>{x, y}});
  }
  return atoms;
}

// Calls visit(index, atom list) for every atom subset of total weight at
// most max_weight, ordered by weight then lexicographically; stops when
// visit returns false.
template <typename Visit>
void enumerate_sets(const std::vector<Atom>& atoms, int max_weight, Visit&& visit) {
  long long index = 0;
  std::vector<int> chosen;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (stop) return;
    if (remaining == 0) {
      if (!visit(index++, chosen)) stop = true;
      return;
    }
    for (std::size_t a = start; a < atoms.size() && !stop; ++a) {
      int w = static_cast<int>(atoms[a].elements.size());
      if (w > remaining) continue;
      chosen.push_back(static_cast<int>(a));
      self(self, a + 1, remaining - w);
      chosen.pop_back();
    }
  };
  for (int weight = 0; weight <= max_weight && !stop; ++weight) rec(rec, 0, weight);
}

}  // namespace

GrrSearchResult find_grr(const PermGroup& g, const GrrSearchOptions& options) {
  if (g.order() > 32) throw LimitError("GRR search supports groups of order at most 32");
  const auto atoms = atoms_of(g);
  const int max_weight = (g.order() - 1) / 2;
  const int workers = std::max(1, options.workers);
  const long long budget = options.budget;

  std::atomic<long long> best{std::numeric_limits<long long>::max()};
  std::atomic<long long> examined{0};
  std::atomic<bool> out_of_budget{false};
  std::mutex mutex;
  ConnectionSet best_set;

  auto work = [&](int w) {
    AutOptions aut_options;
    aut_options.max_order = g.order();
    enumerate_sets(atoms, max_weight, [&](long long index, const std::vector<int>& chosen) {
      if (index >= best.load()) return false;
      if (index >= budget) {
        out_of_budget = true;
        return false;
      }
      if (index % workers != w) return true;
      ConnectionSet s;
      for (int a : chosen) {
        for (int x : atoms[static_cast<std::size_t>(a)].elements) s.push_back(x);
      }
      std::sort(s.begin(), s.end());
      if (g.order() > 2 && g.closure(s).size() != static_cast<std::size_t>(g.order())) return true;
      ++examined;
      auto r = automorphisms(cayley_graph(g, s), aut_options);
      if (!r.order_exceeded && r.order == g.order()) {
        std::lock_guard<std::mutex> lock(mutex);
        if (index < best.load()) {
          best = index;
          best_set = s;
        }
        return false;
      }
      return true;
    });
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  GrrSearchResult result;
  result.examined = examined.load();
  if (best.load() != std::numeric_limits<long long>::max()) {
    result.status = GrrStatus::found;
    result.connection_set = best_set;
    result.first_hit_index = best.load();
  } else {
    result.status = out_of_budget ? GrrStatus::budget_exhausted : GrrStatus::completed_negative;
  }
  return result;
}

}  // namespace autograph
