#include "besicover/metric_space.hpp"

#include <stdexcept>

#include "besicover/generators.hpp"
#include "gtest/gtest.h"

namespace besicover {
namespace {

FiniteMetricSpace tiny_line() {
  // {0, 1/2, 1} on the line.
  return FiniteMetricSpace::from_table(
      {"0", "1/2", "1"},
      {{Rational(0), Rational(1, 2), Rational(1)},
       {Rational(1, 2), Rational(0), Rational(1, 2)},
       {Rational(1), Rational(1, 2), Rational(0)}});
}

TEST(ValidateMetric, PaperUltrametricIsValid) {
  const FiniteMetricSpace space = make_paper_ultrametric(10);
  EXPECT_TRUE(validate_metric(space).valid);
}

TEST(ValidateMetric, TriangleViolationNamesTriple) {
  const FiniteMetricSpace space = FiniteMetricSpace::from_table(
      {"1", "2", "3"},
      {{Rational(0), Rational(5), Rational(1)},
       {Rational(5), Rational(0), Rational(1)},
       {Rational(1), Rational(1), Rational(0)}});
  const ValidationReport report = validate_metric(space);
  EXPECT_FALSE(report.valid);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->x, 0);
  EXPECT_EQ(report.witness->via, 2);
  EXPECT_EQ(report.witness->y, 1);
}

TEST(ValidateMetric, ZeroOneIsValid) {
  EXPECT_TRUE(validate_metric(make_zero_one(7)).valid);
}

TEST(ValidateMetric, RejectsMalformedTables) {
  EXPECT_THROW(FiniteMetricSpace::from_table({}, {{Rational(1)}}),
               std::invalid_argument);  // nonzero diagonal
  EXPECT_THROW(FiniteMetricSpace::from_table(
                   {}, {{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}),
               std::invalid_argument);  // asymmetric
  EXPECT_THROW(FiniteMetricSpace::from_table(
                   {}, {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}),
               std::invalid_argument);  // indistinct points
}

TEST(Ultrametric, PaperSpaceIsUltrametric) {
  EXPECT_TRUE(is_ultrametric(make_paper_ultrametric(64)).ultra);
}

TEST(Ultrametric, LineIsNot) {
  const UltrametricReport report = is_ultrametric(tiny_line());
  EXPECT_FALSE(report.ultra);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->x, 0);
  EXPECT_EQ(report.witness->via, 1);
  EXPECT_EQ(report.witness->y, 2);
}

TEST(Ultrametric, ZeroOneIs) { EXPECT_TRUE(is_ultrametric(make_zero_one(5)).ultra); }

TEST(BallMembers, PaperSpaceClosedBall) {
  const FiniteMetricSpace space = make_paper_ultrametric(10);
  // Point value 3 is index 2; B_cl(3, 2/3) = {1, 2, 3}.
  const PointSet members = ball_members(space, Ball{2, Rational(2, 3), BallKind::Closed});
  EXPECT_EQ(members, (PointSet{0, 1, 2}));
}

TEST(BallMembers, HugeRadiusIsWholeSpace) {
  const FiniteMetricSpace space = make_paper_ultrametric(10);
  const PointSet members = ball_members(space, Ball{4, Rational(5), BallKind::Open});
  EXPECT_EQ(static_cast<int>(members.size()), space.size());
}

TEST(BallMembers, GridUnitBallIsCross) {
  const int n = 5;
  const FiniteMetricSpace space = make_grid_square(n);
  const PointSet members =
      ball_members(space, Ball{grid_index(n, 0, 0), Rational(1), BallKind::Closed});
  // Every point sharing a coordinate with (0,0), by definition of the metric.
  PointSet expect;
  for (int p = 0; p < space.size(); ++p) {
    const auto [x, y] = grid_coords(n, p);
    if (x == 0 || y == 0) expect.push_back(p);
  }
  EXPECT_EQ(members, expect);
}

TEST(BallMembers, OpenVersusClosedAtRealizedRadius) {
  const FiniteMetricSpace space = tiny_line();
  EXPECT_EQ(ball_members(space, Ball{0, Rational(1, 2), BallKind::Open}), (PointSet{0}));
  EXPECT_EQ(ball_members(space, Ball{0, Rational(1, 2), BallKind::Closed}), (PointSet{0, 1}));
}

TEST(BallIdentity, NamesNotMemberSets) {
  const FiniteMetricSpace space = make_paper_ultrametric(6);
  const Ball a{0, Rational(1, 2), BallKind::Closed};  // {1, 2}
  const Ball b{1, Rational(1, 2), BallKind::Closed};  // {1, 2}
  EXPECT_NE(a, b);
  EXPECT_TRUE(same_member_set(space, a, b));
}

TEST(BallFamily, RejectsMixedKinds) {
  BallFamily family(BallKind::Closed);
  family.add(0, Rational(1));
  EXPECT_THROW(family.add(Ball{1, Rational(1), BallKind::Open}), std::invalid_argument);
}

TEST(UltrametricBalls, IntersectingBallsNest) {
  // Over all pairs of balls with radii drawn from the distance set.
  const FiniteMetricSpace space = make_paper_ultrametric(12);
  for (const BallKind kind : {BallKind::Closed, BallKind::Open}) {
    for (const Rational& r : space.realized_distances()) {
      for (const Rational& s : space.realized_distances()) {
        for (int x = 0; x < space.size(); ++x) {
          for (int y = x + 1; y < space.size(); ++y) {
            const Bitset bx = space.member_bitset(Ball{x, r, kind});
            const Bitset by = space.member_bitset(Ball{y, s, kind});
            if (!bx.intersects(by)) continue;
            EXPECT_TRUE(bx.is_subset_of(by) || by.is_subset_of(bx))
                << "balls at " << x << "," << y << " neither nest nor are disjoint";
          }
        }
      }
    }
  }
}

TEST(ApproxMidpoint, UltrametricHasNoneBelowQuarter) {
  const FiniteMetricSpace space = make_paper_ultrametric(16);
  for (int x = 0; x < space.size(); ++x) {
    for (int y = x + 1; y < space.size(); ++y) {
      const Rational eps = space.distance(x, y) / 4;
      EXPECT_FALSE(has_approx_midpoint(space, x, y, eps).has_value());
    }
  }
}

TEST(ApproxMidpoint, SamePointAlwaysHasOne) {
  const FiniteMetricSpace space = make_paper_ultrametric(5);
  const auto z = has_approx_midpoint(space, 3, 3, Rational(1, 100));
  ASSERT_TRUE(z.has_value());
  EXPECT_LT(space.distance(3, *z), Rational(1, 100));
}

TEST(ApproxMidpoint, LatticeHasWitnesses) {
  const FiniteMetricSpace space = make_lattice(1, 11, LatticeNorm::Linf, Rational(1, 10));
  for (int x = 0; x < space.size(); ++x) {
    for (int y = 0; y < space.size(); ++y) {
      const auto z = has_approx_midpoint(space, x, y, Rational(1, 20));
      ASSERT_TRUE(z.has_value()) << x << " " << y;
      const Rational bound = Rational(1, 20) + space.distance(x, y) / 2;
      EXPECT_LT(space.distance(x, *z), bound);
      EXPECT_LT(space.distance(*z, y), bound);
    }
  }
}

TEST(ApproxMidpoint, RequiresPositiveEps) {
  const FiniteMetricSpace space = make_zero_one(3);
  EXPECT_THROW(has_approx_midpoint(space, 0, 1, Rational(0)), std::invalid_argument);
}

TEST(SquaredScale, TriangleWithEqualityHolds) {
  // Points 0, 1, 2 on the line with squared distances 1, 1, 4: the triangle
  // inequality is tight (2 = 1 + 1) and must pass the squared-form check.
  const FiniteMetricSpace space = FiniteMetricSpace::from_table(
      {"0", "1", "2"},
      {{Rational(0), Rational(1), Rational(4)},
       {Rational(1), Rational(0), Rational(1)},
       {Rational(4), Rational(1), Rational(0)}},
      DistanceScale::Squared);
  EXPECT_TRUE(validate_metric(space).valid);
}

TEST(SquaredScale, TriangleViolationDetected) {
  // Squared distances 1, 1, 5: sqrt(5) > 2.
  const FiniteMetricSpace space = FiniteMetricSpace::from_table(
      {"a", "b", "c"},
      {{Rational(0), Rational(1), Rational(5)},
       {Rational(1), Rational(0), Rational(1)},
       {Rational(5), Rational(1), Rational(0)}},
      DistanceScale::Squared);
  EXPECT_FALSE(validate_metric(space).valid);
}

TEST(SquaredScale, EuclideanLatticeValidAndScaled) {
  const FiniteMetricSpace space = make_lattice(2, 4, LatticeNorm::L2Squared, Rational(1));
  EXPECT_EQ(space.scale(), DistanceScale::Squared);
  EXPECT_TRUE(validate_metric(space).valid);
  // Radius arithmetic happens in squared units.
  EXPECT_EQ(space.half_radius(Rational(4)), Rational(1));
  EXPECT_EQ(space.scale_radius(Rational(2), Rational(3)), Rational(18));
  EXPECT_EQ(space.ceil_log2_ratio(Rational(5)), 2);  // sqrt(5) needs two doublings
}

TEST(SquaredScale, MembershipComparesSquares) {
  const FiniteMetricSpace space = make_lattice(2, 3, LatticeNorm::L2Squared, Rational(1));
  // Center of the 3x3 grid; squared radius 2 reaches the diagonal neighbors.
  const int center = 4;
  EXPECT_EQ(ball_members(space, Ball{center, Rational(2), BallKind::Closed}).size(), 9u);
  EXPECT_EQ(ball_members(space, Ball{center, Rational(2), BallKind::Open}).size(), 5u);
}

TEST(CriticalRadii, RealizedPlusMidgaps) {
  const FiniteMetricSpace space = tiny_line();
  const std::vector<Rational> radii = space.critical_radii();
  ASSERT_EQ(radii.size(), 3u);
  EXPECT_EQ(radii[0], Rational(1, 2));
  EXPECT_EQ(radii[1], Rational(3, 4));
  EXPECT_EQ(radii[2], Rational(1));
}

}  // namespace
}  // namespace besicover
