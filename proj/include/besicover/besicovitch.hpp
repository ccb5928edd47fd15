#ifndef BESICOVER_BESICOVITCH_HPP
#define BESICOVER_BESICOVITCH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "besicover/metric_space.hpp"

namespace besicover {

struct BesicovitchFamilyCheck {
  bool ok = true;
  // positions in the family of the offending pair: one ball's nominal center
  // lies in the other ball (by its name).
  std::optional<std::pair<int, int>> violating_pair;
};

// A Besicovitch family contains no ball holding another ball's nominal
// center. Checked on names, so renaming a ball can flip the answer even when
// member sets stay put.
BesicovitchFamilyCheck is_besicovitch_family(const FiniteMetricSpace& space,
                                             const BallFamily& family);

struct OverlapReport {
  int max_overlap = 0;
  int witness_point = -1;
  std::vector<int> per_point;  // overlap histogram, indexed by point
};

OverlapReport max_overlap(const FiniteMetricSpace& space, const BallFamily& family);

struct BesicovitchReport {
  int L = 1;
  BallFamily witness_family{BallKind::Closed};
  int witness_point = -1;
  bool exact = true;  // false when a clique search hit the node budget
};

// Besicovitch constant: the largest Besicovitch family of balls through a
// common point, maximized over points. Only balls through a common point
// matter, and inside such a family at most one ball per center can appear
// with its smallest containing radius from the pool, so the search is a
// maximum clique over centers. Pool defaults to the critical radii plus one
// value below the smallest distance (every ball name is equivalent to one of
// those).
BesicovitchReport besicovitch_constant(const FiniteMetricSpace& space,
                                       std::vector<Rational> radius_pool, BallKind kind,
                                       long budget = 10'000'000);
BesicovitchReport besicovitch_constant(const FiniteMetricSpace& space, BallKind kind,
                                       long budget = 10'000'000);

// On an ultrametric space: no two intersecting balls of the family form a
// Besicovitch pair (one always contains the other's center). Throws
// NotUltrametric.
bool intersecting_family_check(const FiniteMetricSpace& space, const BallFamily& family);

struct RatioWindow {
  Rational lower = 1;
  Rational upper = 1;
  std::pair<int, int> lower_pair{0, 0};
  std::pair<int, int> upper_pair{0, 0};
};

// Min and max of dist_b / dist_a over pairs of distinct points. Both spaces
// must share the point count and the distance scale.
RatioWindow bilipschitz_compare(const FiniteMetricSpace& space_a,
                                const FiniteMetricSpace& space_b);

}  // namespace besicover

#endif
