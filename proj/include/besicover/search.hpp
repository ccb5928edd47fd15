#ifndef BESICOVER_SEARCH_HPP
#define BESICOVER_SEARCH_HPP

#include <vector>

#include "besicover/metric_space.hpp"

namespace besicover {

struct SetCoverResult {
  int count = 0;
  std::vector<int> chosen;  // indices into the candidate list, ascending
  bool exact = true;        // false when the node budget ran out (upper bound)
};

// Minimum set cover of `universe` by the candidate bitsets, branch and bound
// with a greedy upper bound, dominance pruning and a counting lower bound.
// Throws std::logic_error when some universe element lies in no candidate.
SetCoverResult exact_set_cover(const Bitset& universe, const std::vector<Bitset>& sets,
                               long node_budget = 2'000'000);

// Largest-uncovered-gain greedy, ties broken by lowest candidate index.
SetCoverResult greedy_set_cover(const Bitset& universe, const std::vector<Bitset>& sets);

struct CliqueResult {
  int size = 0;
  std::vector<int> members;  // ascending vertex ids
  bool exact = true;
};

// Maximum clique via Tomita-style branch and bound with greedy coloring
// bounds. `adjacency[v]` is the neighbor bitset of v (irreflexive).
CliqueResult max_clique(const std::vector<Bitset>& adjacency, long node_budget = 10'000'000);

// Maximum independent set, solved as a clique in the complement graph.
CliqueResult max_independent_set(const std::vector<Bitset>& adjacency,
                                 long node_budget = 10'000'000);

}  // namespace besicover

#endif
