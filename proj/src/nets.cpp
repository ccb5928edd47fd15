#include "besicover/nets.hpp"

#include <stdexcept>

namespace besicover {

namespace {

bool pair_ok(const FiniteMetricSpace& space, int a, int b, const Rational& r, bool strict) {
  const Rational& d = space.distance(a, b);
  return strict ? d > r : d >= r;
}

}  // namespace

Net greedy_maximal_net(const FiniteMetricSpace& space, const PointSet& scope, const Rational& r,
                       bool strict) {
  if (scope.empty()) throw std::invalid_argument("net scope must be nonempty");
  if (r <= 0) throw std::invalid_argument("net radius must be positive");
  Net net;
  net.r = r;
  net.strict = strict;
  for (int p : scope) {
    bool fits = true;
    for (int q : net.points) {
      if (!pair_ok(space, p, q, r, strict)) {
        fits = false;
        break;
      }
    }
    if (fits) net.points.push_back(p);
  }
  return net;
}

Net greedy_maximal_net_in_ball(const FiniteMetricSpace& space, const Ball& scope,
                               const Rational& r, bool strict) {
  Net net = greedy_maximal_net(space, ball_members(space, scope), r, strict);
  net.maximal_in = scope;
  return net;
}

NetCheck verify_net(const FiniteMetricSpace& space, const Net& net) {
  for (std::size_t i = 0; i < net.points.size(); ++i) {
    for (std::size_t j = i + 1; j < net.points.size(); ++j) {
      if (!pair_ok(space, net.points[i], net.points[j], net.r, net.strict)) {
        return NetCheck{false, std::make_pair(net.points[i], net.points[j])};
      }
    }
  }
  return NetCheck{};
}

DualityReport net_ball_duality(const FiniteMetricSpace& space, const PointSet& points,
                               const Rational& r, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("net_ball_duality requires eps > 0");
  DualityReport report;
  Net as_net;
  as_net.points = points;
  as_net.r = r;
  as_net.strict = false;
  const NetCheck check = verify_net(space, as_net);
  report.is_net = check.valid;
  const Rational half = space.half_radius(r);
  if (check.valid) {
    // Open r/2 balls at net points must have pairwise disjoint member sets.
    std::vector<Bitset> interiors;
    interiors.reserve(points.size());
    for (int p : points) interiors.push_back(space.member_bitset(Ball{p, half, BallKind::Open}));
    for (std::size_t i = 0; i < interiors.size() && report.forward_ok; ++i) {
      for (std::size_t j = i + 1; j < interiors.size(); ++j) {
        if (interiors[i].intersects(interiors[j])) {
          report.forward_ok = false;
          break;
        }
      }
    }
    return report;
  }
  const auto [x, y] = *check.violating_pair;
  report.violating_pair = check.violating_pair;
  const Bitset bx = space.member_bitset(Ball{x, half, BallKind::Open});
  const Bitset by = space.member_bitset(Ball{y, half, BallKind::Open});
  const Bitset both = bx & by;
  if (both.any()) report.ball_witness = static_cast<int>(both.find_first());
  report.midpoint_reachable = has_approx_midpoint(space, x, y, eps).has_value();
  return report;
}

}  // namespace besicover
