#include "besicover/doubling.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "besicover/errors.hpp"
#include "besicover/search.hpp"

namespace besicover {

const char* to_cstring(CoverMethod method) {
  return method == CoverMethod::Exact ? "exact" : "greedy";
}

namespace {

std::vector<Bitset> half_ball_candidates(const FiniteMetricSpace& space, const Rational& half,
                                         BallKind kind) {
  std::vector<Bitset> sets;
  sets.reserve(space.size());
  for (int c = 0; c < space.size(); ++c) {
    sets.push_back(space.member_bitset(Ball{c, half, kind}));
  }
  return sets;
}

void run_chunked(int total, int threads, const std::function<void(int)>& work) {
  threads = std::max(1, threads);
  if (threads == 1 || total <= 1) {
    for (int i = 0; i < total; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  const int workers = std::min(threads, total);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) work(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

BallCover doubling_number(const FiniteMetricSpace& space, const Ball& ball, CoverMethod method,
                          int exact_cap, long node_budget) {
  const Bitset universe = space.member_bitset(ball);
  if (universe.none()) throw std::invalid_argument("doubling_number of an empty ball");
  BallCover result;
  result.target = ball;
  result.degenerate = universe.count() == 1;
  const Rational half = space.half_radius(ball.radius);
  const std::vector<Bitset> sets = half_ball_candidates(space, half, ball.kind);
  SetCoverResult cover;
  if (method == CoverMethod::Exact && static_cast<int>(universe.count()) <= exact_cap) {
    cover = exact_set_cover(universe, sets, node_budget);
  } else {
    cover = greedy_set_cover(universe, sets);
  }
  result.count = cover.count;
  result.exact = cover.exact;
  for (int idx : cover.chosen) result.cover.push_back(Ball{idx, half, ball.kind});
  return result;
}

DoublingReport doubling_constant(const FiniteMetricSpace& space, BallKind kind, CoverMethod method,
                                 int threads) {
  DoublingReport report;
  report.kind = kind;
  report.method = CoverMethod::Exact;
  const auto& realized = space.realized_distances();
  if (realized.empty()) {
    report.degenerate = true;
    report.D = 1;
    return report;
  }

  std::vector<Ball> targets;
  targets.reserve(realized.size() * space.size());
  for (const Rational& s : realized) {
    const Rational r = space.scale_radius(s, 2);
    for (int x = 0; x < space.size(); ++x) targets.push_back(Ball{x, r, kind});
  }

  std::vector<int> counts(targets.size(), 0);
  std::vector<char> exact(targets.size(), 1);
  run_chunked(static_cast<int>(targets.size()), threads, [&](int i) {
    const BallCover cover = doubling_number(space, targets[i], method);
    counts[i] = cover.count;
    exact[i] = cover.exact ? 1 : 0;
  });

  report.per_ball.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    report.per_ball.emplace_back(targets[i], counts[i]);
    if (!exact[i]) report.method = CoverMethod::GreedyUpperBound;
    if (counts[i] > report.D) {
      report.D = counts[i];
      report.witness_ball = targets[i];
    }
  }
  if (!report.witness_ball && !targets.empty()) report.witness_ball = targets.front();
  if (method == CoverMethod::GreedyUpperBound) report.method = CoverMethod::GreedyUpperBound;
  return report;
}

ScaledCoverResult scaled_cover(const FiniteMetricSpace& space, const Ball& ball, const Rational& t,
                               int doubling_bound) {
  if (t <= 0 || t > 1) throw std::invalid_argument("scaled_cover requires t in (0, 1]");
  if (doubling_bound < 1) throw std::invalid_argument("doubling bound must be >= 1");
  ScaledCoverResult result;
  result.exponent = ceil_neg_log2(t);
  result.bound = ipow(Int(doubling_bound), result.exponent);
  if (result.exponent == 0) {
    result.cover = {ball};
    return result;
  }

  // k rounds of minimal half-radius covers, then rename the surviving
  // centers to radius t*r balls (2^-k r <= t r, so membership only grows).
  std::vector<int> centers = {ball.center};
  Rational radius = ball.radius;
  for (int step = 0; step < result.exponent; ++step) {
    const Rational half = space.half_radius(radius);
    std::vector<int> next;
    for (int c : centers) {
      const BallCover cover = doubling_number(space, Ball{c, radius, ball.kind}, CoverMethod::Exact);
      for (const Ball& b : cover.cover) next.push_back(b.center);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    centers = std::move(next);
    radius = half;
  }

  const Rational scaled = space.scale_radius(ball.radius, t);
  Bitset covered(space.size());
  for (int c : centers) {
    result.cover.push_back(Ball{c, scaled, ball.kind});
    covered |= space.member_bitset(result.cover.back());
  }
  if (!space.member_bitset(ball).is_subset_of(covered)) {
    throw std::logic_error("scaled_cover lost coverage");  // cannot happen: radii only grew
  }
  result.ok = Int(static_cast<long>(result.cover.size())) <= result.bound;
  if (!result.ok) {
    throw Error(Errc::BoundViolated,
                "scaled cover needs " + std::to_string(result.cover.size()) + " balls, bound " +
                    result.bound.str() + "; N=" + std::to_string(doubling_bound) +
                    " is not a doubling bound");
  }
  return result;
}

PackingReport packing_bound_check(const FiniteMetricSpace& space, const Ball& ball,
                                  const Rational& t, int doubling_bound, long node_budget) {
  if (t <= 0 || t > 1) throw std::invalid_argument("packing_bound_check requires t in (0, 1]");
  PackingReport report;
  report.exponent = ceil_neg_log2(t / 2);
  report.bound = ipow(Int(doubling_bound), report.exponent);

  const PointSet centers = ball_members(space, ball);
  const Rational small = space.half_radius(space.scale_radius(ball.radius, t));
  std::vector<Bitset> members;
  members.reserve(centers.size());
  for (int c : centers) members.push_back(space.member_bitset(Ball{c, small, ball.kind}));

  const int m = static_cast<int>(centers.size());
  std::vector<Bitset> conflicts(m, Bitset(m));
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (members[a].intersects(members[b])) {
        conflicts[a].set(b);
        conflicts[b].set(a);
      }
    }
  }
  const CliqueResult packing = max_independent_set(conflicts, node_budget);
  report.max_packing = packing.size;
  report.exact = packing.exact;
  for (int idx : packing.members) report.centers.push_back(centers[idx]);
  report.ok = Int(report.max_packing) <= report.bound;
  return report;
}

NetCoverResult maximal_net_cover(const FiniteMetricSpace& space, const Ball& ball,
                                 const Rational& t) {
  if (t <= 0 || t > 1) throw std::invalid_argument("maximal_net_cover requires t in (0, 1]");
  NetCoverResult result;
  const Rational scaled = space.scale_radius(ball.radius, t);
  const Rational half = space.half_radius(scaled);
  const PointSet candidates = ball_members(space, ball);
  std::vector<Bitset> chosen;
  for (int c : candidates) {
    const Bitset mine = space.member_bitset(Ball{c, half, ball.kind});
    bool disjoint = true;
    for (const Bitset& other : chosen) {
      if (mine.intersects(other)) {
        disjoint = false;
        break;
      }
    }
    if (disjoint) {
      chosen.push_back(mine);
      result.centers.push_back(c);
    }
  }
  Bitset covered(space.size());
  for (int c : result.centers) {
    result.cover.push_back(Ball{c, scaled, ball.kind});
    covered |= space.member_bitset(result.cover.back());
  }
  result.covers_target = space.member_bitset(ball).is_subset_of(covered);
  return result;
}

}  // namespace besicover
