#ifndef BESICOVER_NETS_HPP
#define BESICOVER_NETS_HPP

#include <optional>

#include "besicover/metric_space.hpp"

namespace besicover {

// Strict r-net: pairwise d > r. Non-strict: pairwise d >= r. Strict nets pair
// with closed balls, non-strict with open ones, so that the r/2 balls at net
// points always have disjoint interiors.
struct Net {
  PointSet points;
  Rational r = 1;
  bool strict = true;
  std::optional<Ball> maximal_in;  // scope the net is maximal in, when a ball
};

// Greedy in ascending point index over `scope`; the result satisfies the
// pairwise condition and no scope point can be added.
Net greedy_maximal_net(const FiniteMetricSpace& space, const PointSet& scope, const Rational& r,
                       bool strict);
Net greedy_maximal_net_in_ball(const FiniteMetricSpace& space, const Ball& scope,
                               const Rational& r, bool strict);

struct NetCheck {
  bool valid = true;
  std::optional<std::pair<int, int>> violating_pair;
};

NetCheck verify_net(const FiniteMetricSpace& space, const Net& net);

// Finite rendering of the net/disjoint-ball duality. The forward direction
// (valid non-strict r-net => open r/2 balls pairwise disjoint) is checked
// outright. When S fails the net condition the violating pair is returned
// together with a point of both open r/2 balls, if any exists; on spaces
// without approximate midpoints (ultrametrics) no such point needs to exist.
// `eps` drives the midpoint diagnostic reported alongside.
struct DualityReport {
  bool is_net = false;
  bool forward_ok = true;                           // disjointness when is_net
  std::optional<std::pair<int, int>> violating_pair;  // d(x,y) < r
  std::optional<int> ball_witness;                  // z in both open r/2 balls
  bool midpoint_reachable = false;                  // eps-midpoint exists for the pair
};

DualityReport net_ball_duality(const FiniteMetricSpace& space, const PointSet& points,
                               const Rational& r, const Rational& eps);

}  // namespace besicover

#endif
