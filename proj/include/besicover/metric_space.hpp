#ifndef BESICOVER_METRIC_SPACE_HPP
#define BESICOVER_METRIC_SPACE_HPP

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "besicover/rational.hpp"

namespace besicover {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using PointSet = std::vector<int>;  // ascending, no duplicates

enum class BallKind { Open, Closed };

// Distances can be stored either directly (Plain) or as squares of the true
// distances (Squared). The Squared form keeps Euclidean lattices inside
// rational arithmetic: membership d <= r becomes d^2 <= r^2, so radii on a
// Squared space are given in squared units as well. Order comparisons are
// identical in both forms; only radius scaling and the few additive checks
// (triangle inequality, approximate midpoints) need to know the difference.
enum class DistanceScale { Plain, Squared };

const char* to_cstring(BallKind kind);
const char* to_cstring(DistanceScale scale);

// A named ball: identity is the (center, radius, kind) triple, never the
// member set. Two balls with equal member sets but different names compare
// unequal.
struct Ball {
  int center = 0;
  Rational radius = 1;
  BallKind kind = BallKind::Closed;

  bool operator==(const Ball& other) const = default;
};

// Ordered multiset of balls of one common kind. Duplicates are permitted.
class BallFamily {
 public:
  explicit BallFamily(BallKind kind) : kind_(kind) {}

  void add(Ball ball);  // throws if the kind differs
  void add(int center, Rational radius) { add(Ball{center, std::move(radius), kind_}); }

  BallKind kind() const { return kind_; }
  const std::vector<Ball>& balls() const { return balls_; }
  std::size_t size() const { return balls_.size(); }
  bool empty() const { return balls_.empty(); }
  const Ball& operator[](std::size_t i) const { return balls_[i]; }

 private:
  BallKind kind_;
  std::vector<Ball> balls_;
};

struct TriangleWitness {
  int x = 0;
  int via = 0;
  int y = 0;
};

struct ValidationReport {
  bool valid = false;
  std::optional<TriangleWitness> witness;  // triangle violations
  std::optional<std::pair<int, int>> pair_witness;  // symmetry / positivity
  std::string reason;
};

struct UltrametricReport {
  bool ultra = false;
  std::optional<TriangleWitness> witness;
};

class FiniteMetricSpace {
 public:
  // `table` is a full n x n distance table; shape, zero diagonal, symmetry
  // and positivity are enforced here, the triangle inequality is not (query
  // validate_metric for that).
  static FiniteMetricSpace from_table(std::vector<std::string> labels,
                                      std::vector<std::vector<Rational>> table,
                                      DistanceScale scale = DistanceScale::Plain);

  int size() const { return n_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  DistanceScale scale() const { return scale_; }

  const Rational& distance(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }

  // Radius arithmetic in the stored domain. Halving a true radius divides a
  // Squared-space radius by four; scaling by t multiplies it by t^2.
  Rational half_radius(const Rational& r) const;
  Rational scale_radius(const Rational& r, const Rational& t) const;
  // ceil(log2(.)) of a true-domain ratio handed over in stored units.
  int ceil_log2_ratio(const Rational& stored_ratio) const;

  // Sorted distinct positive distances, and those plus the midpoints of
  // consecutive gaps (member sets only change at realized values).
  const std::vector<Rational>& realized_distances() const;
  std::vector<Rational> critical_radii() const;
  const Rational& diameter() const;
  const Rational& min_distance() const;

  // Index of the largest realized distance <= r (closed) or < r (open),
  // counting the zero distance as index 0. Membership tests reduce to integer
  // rank comparisons.
  std::uint32_t rank(int i, int j) const;
  std::uint32_t radius_rank(const Rational& r, BallKind kind) const;

  bool ball_contains(const Ball& ball, int p) const;
  Bitset member_bitset(const Ball& ball) const;

  const ValidationReport& validation() const;
  const UltrametricReport& ultrametric() const;

 private:
  struct LazyReports {
    std::mutex mutex;
    std::optional<ValidationReport> validation;
    std::optional<UltrametricReport> ultrametric;
  };

  FiniteMetricSpace() = default;
  void build_ranks();

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> dist_;  // row-major, symmetric
  DistanceScale scale_ = DistanceScale::Plain;
  std::vector<Rational> realized_;        // distinct positive, ascending
  std::vector<std::uint32_t> rank_;       // 0 = zero distance, k = realized_[k-1]
  std::shared_ptr<LazyReports> reports_ = std::make_shared<LazyReports>();
};

ValidationReport validate_metric(const FiniteMetricSpace& space);
UltrametricReport is_ultrametric(const FiniteMetricSpace& space);

PointSet ball_members(const FiniteMetricSpace& space, const Ball& ball);
bool same_member_set(const FiniteMetricSpace& space, const Ball& a, const Ball& b);

// First point z (ascending index) with d(x,z) < eps + d(x,y)/2 and
// d(z,y) < eps + d(x,y)/2, or nothing. eps is a true-domain length and must
// be positive; on Squared spaces the comparison is carried out exactly by
// repeated squaring.
std::optional<int> has_approx_midpoint(const FiniteMetricSpace& space, int x, int y,
                                       const Rational& eps);

PointSet all_points(const FiniteMetricSpace& space);
Bitset full_bitset(int n);
PointSet bitset_to_points(const Bitset& bits);
Bitset points_to_bitset(const PointSet& points, int n);

}  // namespace besicover

#endif
