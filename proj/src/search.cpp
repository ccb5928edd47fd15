#include "besicover/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace besicover {

namespace {

struct CoverContext {
  const std::vector<Bitset>* sets = nullptr;
  std::vector<int> order;  // candidate indices, largest first
  long budget = 0;
  long nodes = 0;
  bool exact = true;
  std::vector<int> best;
  std::vector<int> current;

  void search(const Bitset& uncovered) {
    if (uncovered.none()) {
      if (best.empty() || current.size() < best.size()) best = current;
      return;
    }
    if (!best.empty() && current.size() + 1 >= best.size()) return;
    if (++nodes > budget) {
      exact = false;
      return;
    }
    // Counting lower bound: even perfectly disjoint picks of the largest
    // remaining set cannot beat the incumbent.
    std::size_t largest = 0;
    for (int idx : order) {
      const std::size_t gain = ((*sets)[idx] & uncovered).count();
      largest = std::max(largest, gain);
    }
    if (largest == 0) return;  // infeasible branch
    const std::size_t need = (uncovered.count() + largest - 1) / largest;
    if (!best.empty() && current.size() + need >= best.size()) return;

    // Branch on the uncovered element with the fewest candidates.
    int pivot = -1;
    long pivot_count = -1;
    for (auto p = uncovered.find_first(); p != Bitset::npos; p = uncovered.find_next(p)) {
      long count = 0;
      for (int idx : order) {
        if ((*sets)[idx].test(p)) ++count;
      }
      if (pivot < 0 || count < pivot_count) {
        pivot = static_cast<int>(p);
        pivot_count = count;
      }
      if (pivot_count <= 1) break;
    }
    std::vector<int> options;
    for (int idx : order) {
      if ((*sets)[idx].test(pivot)) options.push_back(idx);
    }
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return ((*sets)[a] & uncovered).count() > ((*sets)[b] & uncovered).count();
    });
    for (int idx : options) {
      current.push_back(idx);
      search(uncovered - (*sets)[idx]);
      current.pop_back();
      if (!exact) return;
    }
  }
};

}  // namespace

SetCoverResult greedy_set_cover(const Bitset& universe, const std::vector<Bitset>& sets) {
  SetCoverResult result;
  Bitset uncovered = universe;
  while (uncovered.any()) {
    int best_idx = -1;
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::size_t gain = (sets[i] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best_idx = static_cast<int>(i);
      }
    }
    if (best_idx < 0) throw std::logic_error("set cover infeasible: uncovered element remains");
    result.chosen.push_back(best_idx);
    uncovered -= sets[best_idx];
  }
  std::sort(result.chosen.begin(), result.chosen.end());
  result.count = static_cast<int>(result.chosen.size());
  result.exact = false;
  return result;
}

SetCoverResult exact_set_cover(const Bitset& universe, const std::vector<Bitset>& sets,
                               long node_budget) {
  if (universe.none()) return SetCoverResult{0, {}, true};

  // Restrict to the universe, drop empty and dominated candidates.
  std::vector<Bitset> restricted(sets.size());
  std::vector<char> keep(sets.size(), 1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    restricted[i] = sets[i] & universe;
    if (restricted[i].none()) keep[i] = 0;
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (restricted[i].is_subset_of(restricted[j]) &&
          (restricted[i] != restricted[j] || j < i)) {
        keep[i] = 0;
        break;
      }
    }
  }

  CoverContext ctx;
  ctx.sets = &restricted;
  ctx.budget = node_budget;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (keep[i]) ctx.order.push_back(static_cast<int>(i));
  }
  std::stable_sort(ctx.order.begin(), ctx.order.end(), [&](int a, int b) {
    return restricted[a].count() > restricted[b].count();
  });

  Bitset check = universe;
  for (int idx : ctx.order) check -= restricted[idx];
  if (check.any()) throw std::logic_error("set cover infeasible: uncovered element remains");

  const SetCoverResult greedy = greedy_set_cover(universe, restricted);
  ctx.best = greedy.chosen;
  ctx.search(universe);

  SetCoverResult result;
  result.chosen = ctx.best;
  std::sort(result.chosen.begin(), result.chosen.end());
  result.count = static_cast<int>(result.chosen.size());
  result.exact = ctx.exact;
  return result;
}

namespace {

struct CliqueContext {
  const std::vector<Bitset>* adj = nullptr;
  long budget = 0;
  long nodes = 0;
  bool exact = true;
  std::vector<int> best;
  std::vector<int> current;

  void expand(const Bitset& candidates) {
    if (++nodes > budget) {
      exact = false;
      return;
    }
    if (candidates.none()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    // Greedy coloring bound: vertices of one color class are pairwise
    // non-adjacent, so the clique can use at most one per class.
    std::vector<int> order;
    std::vector<int> bound;
    Bitset remaining = candidates;
    int color = 0;
    while (remaining.any()) {
      ++color;
      Bitset cls = remaining;
      while (cls.any()) {
        const auto v = cls.find_first();
        order.push_back(static_cast<int>(v));
        bound.push_back(color);
        cls.reset(v);
        remaining.reset(v);
        cls -= (*adj)[v];
      }
    }
    Bitset live = candidates;
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best.size()) return;
      const int v = order[i];
      current.push_back(v);
      expand(live & (*adj)[v]);
      current.pop_back();
      if (!exact) return;
      live.reset(v);
    }
  }
};

}  // namespace

CliqueResult max_clique(const std::vector<Bitset>& adjacency, long node_budget) {
  const int n = static_cast<int>(adjacency.size());
  if (n == 0) return CliqueResult{0, {}, true};
  CliqueContext ctx;
  ctx.adj = &adjacency;
  ctx.budget = node_budget;
  ctx.expand(full_bitset(n));
  CliqueResult result;
  result.members = ctx.best;
  std::sort(result.members.begin(), result.members.end());
  result.size = static_cast<int>(result.members.size());
  result.exact = ctx.exact;
  return result;
}

CliqueResult max_independent_set(const std::vector<Bitset>& adjacency, long node_budget) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<Bitset> complement(n, Bitset(n));
  for (int v = 0; v < n; ++v) {
    complement[v] = ~adjacency[v];
    complement[v].reset(v);
  }
  return max_clique(complement, node_budget);
}

}  // namespace besicover
