#ifndef BESICOVER_DOUBLING_HPP
#define BESICOVER_DOUBLING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "besicover/metric_space.hpp"

namespace besicover {

enum class CoverMethod { Exact, GreedyUpperBound };

const char* to_cstring(CoverMethod method);

struct BallCover {
  Ball target;
  std::vector<Ball> cover;  // half-radius balls, centers at space points
  int count = 0;
  bool exact = true;
  bool degenerate = false;  // target is a singleton
};

// Minimum number of half-radius balls of the same kind covering the member
// set of `ball`. Candidate centers are all points of the space. Exact uses
// branch-and-bound set cover and falls back to the greedy bound (flagged via
// `exact = false`) when the scope exceeds `exact_cap` or the node budget.
BallCover doubling_number(const FiniteMetricSpace& space, const Ball& ball, CoverMethod method,
                          int exact_cap = 512, long node_budget = 2'000'000);

struct DoublingReport {
  int D = 1;
  BallKind kind = BallKind::Closed;
  CoverMethod method = CoverMethod::Exact;  // Exact only if every count is certified
  bool degenerate = false;                  // single-point space: D = 1 by convention
  std::optional<Ball> witness_ball;
  std::vector<std::pair<Ball, int>> per_ball;
};

// Doubling constant: the worst doubling_number over the balls B(x, 2s) for
// every center x and every realized distance s (so the half-radius balls have
// radius exactly s). Member sets of both the target and the half-radius
// balls only change when s crosses a realized distance, so this enumeration
// realizes every cover-by-half-balls configuration a finite space admits.
DoublingReport doubling_constant(const FiniteMetricSpace& space, BallKind kind, CoverMethod method,
                                 int threads = 1);

struct ScaledCoverResult {
  std::vector<Ball> cover;  // balls of radius t*r covering the target
  int exponent = 0;         // ceil(-log2 t)
  Int bound = 1;            // N^exponent
  bool ok = true;
};

// Iterated halving: k = ceil(-log2 t) rounds of minimal half-radius covers,
// then the surviving centers carry balls of radius t*r. Throws BoundViolated
// when the result exceeds N^k, which certifies that N was not a doubling
// bound for the space.
ScaledCoverResult scaled_cover(const FiniteMetricSpace& space, const Ball& ball, const Rational& t,
                               int doubling_bound);

struct PackingReport {
  int max_packing = 0;
  std::vector<int> centers;
  int exponent = 0;  // ceil(-log2 (t/2))
  Int bound = 1;     // N^exponent
  bool ok = true;
  bool exact = true;  // false when the search degraded to a greedy lower bound
};

// Largest family of disjoint balls of radius t*r/2 with centers inside the
// target ball, compared against N^ceil(-log2(t/2)).
PackingReport packing_bound_check(const FiniteMetricSpace& space, const Ball& ball,
                                  const Rational& t, int doubling_bound,
                                  long node_budget = 10'000'000);

struct NetCoverResult {
  std::vector<int> centers;  // maximal family with disjoint t*r/2 balls
  std::vector<Ball> cover;   // t*r balls at those centers
  bool covers_target = true;
};

// Cover of the target by t*r balls centered at a greedy maximal family of
// disjoint t*r/2 balls. Correct in every metric space; usually not minimal.
NetCoverResult maximal_net_cover(const FiniteMetricSpace& space, const Ball& ball,
                                 const Rational& t);

}  // namespace besicover

#endif
