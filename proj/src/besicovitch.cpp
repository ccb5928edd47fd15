#include "besicover/besicovitch.hpp"

#include <algorithm>
#include <stdexcept>

#include "besicover/errors.hpp"
#include "besicover/search.hpp"

namespace besicover {

BesicovitchFamilyCheck is_besicovitch_family(const FiniteMetricSpace& space,
                                             const BallFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (space.ball_contains(family[i], family[j].center) ||
          space.ball_contains(family[j], family[i].center)) {
        return BesicovitchFamilyCheck{false,
                                      std::make_pair(static_cast<int>(i), static_cast<int>(j))};
      }
    }
  }
  return BesicovitchFamilyCheck{};
}

OverlapReport max_overlap(const FiniteMetricSpace& space, const BallFamily& family) {
  OverlapReport report;
  report.per_point.assign(space.size(), 0);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Bitset members = space.member_bitset(family[i]);
    for (auto p = members.find_first(); p != Bitset::npos; p = members.find_next(p)) {
      ++report.per_point[p];
    }
  }
  for (int p = 0; p < space.size(); ++p) {
    if (report.per_point[p] > report.max_overlap) {
      report.max_overlap = report.per_point[p];
      report.witness_point = p;
    }
  }
  return report;
}

BesicovitchReport besicovitch_constant(const FiniteMetricSpace& space,
                                       std::vector<Rational> radius_pool, BallKind kind,
                                       long budget) {
  if (radius_pool.empty()) throw std::invalid_argument("radius pool must be nonempty");
  std::sort(radius_pool.begin(), radius_pool.end());
  radius_pool.erase(std::unique(radius_pool.begin(), radius_pool.end()), radius_pool.end());
  if (radius_pool.front() <= 0) throw std::invalid_argument("radii must be positive");

  BesicovitchReport report;
  report.witness_family = BallFamily(kind);
  const int n = space.size();
  for (int p = 0; p < n; ++p) {
    // Smallest pool radius whose ball at each center c contains p; any larger
    // choice only tightens the mutual-exclusion constraint against the other
    // clique members, so the minimal name is optimal.
    std::vector<int> centers;
    std::vector<Rational> rho;
    for (int c = 0; c < n; ++c) {
      const Rational& d = space.distance(c, p);
      const auto it = kind == BallKind::Closed
                          ? std::lower_bound(radius_pool.begin(), radius_pool.end(), d)
                          : std::upper_bound(radius_pool.begin(), radius_pool.end(), d);
      if (it == radius_pool.end()) continue;
      centers.push_back(c);
      rho.push_back(*it);
    }
    const int m = static_cast<int>(centers.size());
    std::vector<Bitset> adjacency(m, Bitset(m));
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        const Rational& d = space.distance(centers[a], centers[b]);
        const Rational& big = std::max(rho[a], rho[b]);
        const bool excluded = kind == BallKind::Closed ? d > big : d >= big;
        if (excluded) {
          adjacency[a].set(b);
          adjacency[b].set(a);
        }
      }
    }
    const CliqueResult clique = max_clique(adjacency, budget);
    if (!clique.exact) report.exact = false;
    if (clique.size > report.L || report.witness_point < 0) {
      report.L = std::max(clique.size, 1);
      report.witness_point = p;
      report.witness_family = BallFamily(kind);
      for (int idx : clique.members) {
        report.witness_family.add(centers[idx], rho[idx]);
      }
      if (clique.members.empty() && m > 0) {
        // Even a lone ball through p witnesses L >= 1.
        report.witness_family.add(centers[0], rho[0]);
      }
    }
  }
  return report;
}

BesicovitchReport besicovitch_constant(const FiniteMetricSpace& space, BallKind kind,
                                       long budget) {
  std::vector<Rational> pool = space.critical_radii();
  if (pool.empty()) {
    pool.push_back(Rational(1));
  } else {
    pool.push_back(space.min_distance() / 2);
  }
  return besicovitch_constant(space, std::move(pool), kind, budget);
}

bool intersecting_family_check(const FiniteMetricSpace& space, const BallFamily& family) {
  if (!space.ultrametric().ultra) {
    throw Error(Errc::NotUltrametric, "intersecting_family_check requires an ultrametric space");
  }
  std::vector<Bitset> members;
  members.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    members.push_back(space.member_bitset(family[i]));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!members[i].intersects(members[j])) continue;
      const bool besicovitch_pair = !space.ball_contains(family[i], family[j].center) &&
                                    !space.ball_contains(family[j], family[i].center);
      if (besicovitch_pair) return false;
    }
  }
  return true;
}

RatioWindow bilipschitz_compare(const FiniteMetricSpace& space_a,
                                const FiniteMetricSpace& space_b) {
  if (space_a.size() != space_b.size()) {
    throw std::invalid_argument("bilipschitz_compare requires identical point counts");
  }
  if (space_a.scale() != space_b.scale()) {
    throw std::invalid_argument("bilipschitz_compare requires matching distance scales");
  }
  if (space_a.size() < 2) return RatioWindow{};
  RatioWindow window;
  bool first = true;
  for (int i = 0; i < space_a.size(); ++i) {
    for (int j = i + 1; j < space_a.size(); ++j) {
      const Rational ratio = space_b.distance(i, j) / space_a.distance(i, j);
      if (first || ratio < window.lower) {
        window.lower = ratio;
        window.lower_pair = {i, j};
      }
      if (first || ratio > window.upper) {
        window.upper = ratio;
        window.upper_pair = {i, j};
      }
      first = false;
    }
  }
  return window;
}

}  // namespace besicover
