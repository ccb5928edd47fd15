#include "besicover/metric_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace besicover {

const char* to_cstring(BallKind kind) { return kind == BallKind::Open ? "open" : "closed"; }

const char* to_cstring(DistanceScale scale) {
  return scale == DistanceScale::Plain ? "plain" : "squared";
}

void BallFamily::add(Ball ball) {
  if (ball.kind != kind_) throw std::invalid_argument("mixed ball kinds in one family");
  if (ball.radius <= 0) throw std::invalid_argument("ball radius must be positive");
  balls_.push_back(std::move(ball));
}

FiniteMetricSpace FiniteMetricSpace::from_table(std::vector<std::string> labels,
                                                std::vector<std::vector<Rational>> table,
                                                DistanceScale scale) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty distance table");
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("label count does not match point count");
  }
  FiniteMetricSpace space;
  space.n_ = n;
  space.labels_ = std::move(labels);
  space.scale_ = scale;
  space.dist_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      throw std::invalid_argument("distance table is not square");
    }
    for (int j = 0; j < n; ++j) {
      space.dist_[static_cast<std::size_t>(i) * n + j] = table[i][j];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (space.distance(i, i) != 0) throw std::invalid_argument("nonzero diagonal entry");
    for (int j = i + 1; j < n; ++j) {
      if (space.distance(i, j) != space.distance(j, i)) {
        throw std::invalid_argument("asymmetric distance table");
      }
      if (space.distance(i, j) <= 0) {
        throw std::invalid_argument("nonpositive distance between distinct points");
      }
    }
  }
  space.build_ranks();
  return space;
}

Rational FiniteMetricSpace::half_radius(const Rational& r) const {
  return scale_ == DistanceScale::Plain ? r / 2 : r / 4;
}

Rational FiniteMetricSpace::scale_radius(const Rational& r, const Rational& t) const {
  return scale_ == DistanceScale::Plain ? r * t : r * t * t;
}

int FiniteMetricSpace::ceil_log2_ratio(const Rational& stored_ratio) const {
  return scale_ == DistanceScale::Plain ? ceil_log2(stored_ratio) : ceil_log2_sqrt(stored_ratio);
}

void FiniteMetricSpace::build_ranks() {
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) values.push_back(distance(i, j));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  realized_ = std::move(values);
  rank_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const auto it = std::lower_bound(realized_.begin(), realized_.end(), distance(i, j));
      const auto r = static_cast<std::uint32_t>(it - realized_.begin()) + 1;
      rank_[static_cast<std::size_t>(i) * n_ + j] = r;
      rank_[static_cast<std::size_t>(j) * n_ + i] = r;
    }
  }
}

const std::vector<Rational>& FiniteMetricSpace::realized_distances() const { return realized_; }

std::vector<Rational> FiniteMetricSpace::critical_radii() const {
  const auto& realized = realized_distances();
  std::vector<Rational> radii;
  radii.reserve(realized.size() * 2);
  for (std::size_t k = 0; k < realized.size(); ++k) {
    radii.push_back(realized[k]);
    if (k + 1 < realized.size()) radii.push_back((realized[k] + realized[k + 1]) / 2);
  }
  return radii;
}

const Rational& FiniteMetricSpace::diameter() const {
  static const Rational zero(0);
  const auto& realized = realized_distances();
  return realized.empty() ? zero : realized.back();
}

const Rational& FiniteMetricSpace::min_distance() const {
  static const Rational zero(0);
  const auto& realized = realized_distances();
  return realized.empty() ? zero : realized.front();
}

std::uint32_t FiniteMetricSpace::rank(int i, int j) const {
  return rank_[static_cast<std::size_t>(i) * n_ + j];
}

std::uint32_t FiniteMetricSpace::radius_rank(const Rational& r, BallKind kind) const {
  if (kind == BallKind::Closed) {
    const auto it = std::upper_bound(realized_.begin(), realized_.end(), r);
    return static_cast<std::uint32_t>(it - realized_.begin());
  }
  const auto it = std::lower_bound(realized_.begin(), realized_.end(), r);
  return static_cast<std::uint32_t>(it - realized_.begin());
}

bool FiniteMetricSpace::ball_contains(const Ball& ball, int p) const {
  const Rational& d = distance(ball.center, p);
  return ball.kind == BallKind::Closed ? d <= ball.radius : d < ball.radius;
}

Bitset FiniteMetricSpace::member_bitset(const Ball& ball) const {
  if (ball.center < 0 || ball.center >= n_) throw std::out_of_range("ball center out of range");
  if (ball.radius <= 0) throw std::invalid_argument("ball radius must be positive");
  // For open balls radius_rank(r) is the count of realized distances < r, so
  // rank <= bound covers d < r (rank 0 is the zero distance, always inside).
  const std::uint32_t bound = radius_rank(ball.radius, ball.kind);
  Bitset bits(n_);
  const std::uint32_t* row = rank_.data() + static_cast<std::size_t>(ball.center) * n_;
  for (int p = 0; p < n_; ++p) {
    if (row[p] <= bound) bits.set(p);
  }
  return bits;
}

namespace {

// sqrt(a) <= sqrt(b) + sqrt(c) on squared values, exactly.
bool sqrt_triangle_holds(const Rational& a, const Rational& b, const Rational& c) {
  const Rational lhs = a - b - c;
  if (lhs <= 0) return true;
  return lhs * lhs <= 4 * b * c;
}

// sqrt(a) < eps + sqrt(c)/2 on squared values, eps > 0 plain.
bool sqrt_lt_eps_plus_half(const Rational& a, const Rational& eps, const Rational& c) {
  const Rational lhs = a - eps * eps - c / 4;
  if (lhs < 0) return true;
  return lhs * lhs < eps * eps * c;
}

}  // namespace

const ValidationReport& FiniteMetricSpace::validation() const {
  {
    std::scoped_lock lock(reports_->mutex);
    if (reports_->validation) return *reports_->validation;
  }
  ValidationReport report;
  report.valid = true;
  // Diagonal, symmetry and positivity hold by construction; the triangle
  // inequality is the real check. When the diameter is at most twice the
  // smallest distance the inequality holds for every triple of distinct
  // points, which skips the cubic loop on the dense combinatorial spaces.
  const bool shortcut =
      scale_ == DistanceScale::Plain && !realized_distances().empty() &&
      diameter() <= 2 * min_distance();
  if (!shortcut) {
    for (int x = 0; x < n_ && report.valid; ++x) {
      for (int y = x + 1; y < n_ && report.valid; ++y) {
        const Rational& dxy = distance(x, y);
        for (int via = 0; via < n_; ++via) {
          if (via == x || via == y) continue;
          const Rational& a = distance(x, via);
          const Rational& b = distance(via, y);
          const bool ok = scale_ == DistanceScale::Plain ? dxy <= a + b
                                                         : sqrt_triangle_holds(dxy, a, b);
          if (!ok) {
            report.valid = false;
            report.witness = TriangleWitness{x, via, y};
            report.reason = "triangle inequality fails: d(" + labels_[x] + "," + labels_[y] +
                            ") > d(" + labels_[x] + "," + labels_[via] + ") + d(" +
                            labels_[via] + "," + labels_[y] + ")";
            break;
          }
        }
      }
    }
  }
  std::scoped_lock lock(reports_->mutex);
  if (!reports_->validation) reports_->validation = std::move(report);
  return *reports_->validation;
}

const UltrametricReport& FiniteMetricSpace::ultrametric() const {
  {
    std::scoped_lock lock(reports_->mutex);
    if (reports_->ultrametric) return *reports_->ultrametric;
  }
  UltrametricReport report;
  report.ultra = true;
  // d(x,y) <= max{d(x,w), d(w,y)} is an order statement, so integer ranks
  // decide it on both Plain and Squared tables.
  for (int x = 0; x < n_ && report.ultra; ++x) {
    const std::uint32_t* row_x = rank_.data() + static_cast<std::size_t>(x) * n_;
    for (int y = x + 1; y < n_ && report.ultra; ++y) {
      const std::uint32_t rxy = row_x[y];
      const std::uint32_t* row_y = rank_.data() + static_cast<std::size_t>(y) * n_;
      for (int via = 0; via < n_; ++via) {
        if (via == x || via == y) continue;
        if (rxy > std::max(row_x[via], row_y[via])) {
          report.ultra = false;
          report.witness = TriangleWitness{x, via, y};
          break;
        }
      }
    }
  }
  std::scoped_lock lock(reports_->mutex);
  if (!reports_->ultrametric) reports_->ultrametric = std::move(report);
  return *reports_->ultrametric;
}

ValidationReport validate_metric(const FiniteMetricSpace& space) { return space.validation(); }

UltrametricReport is_ultrametric(const FiniteMetricSpace& space) { return space.ultrametric(); }

PointSet ball_members(const FiniteMetricSpace& space, const Ball& ball) {
  return bitset_to_points(space.member_bitset(ball));
}

bool same_member_set(const FiniteMetricSpace& space, const Ball& a, const Ball& b) {
  return space.member_bitset(a) == space.member_bitset(b);
}

std::optional<int> has_approx_midpoint(const FiniteMetricSpace& space, int x, int y,
                                       const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("approximate midpoint requires eps > 0");
  const Rational& dxy = space.distance(x, y);
  for (int z = 0; z < space.size(); ++z) {
    const Rational& a = space.distance(x, z);
    const Rational& b = space.distance(z, y);
    bool ok;
    if (space.scale() == DistanceScale::Plain) {
      const Rational bound = eps + dxy / 2;
      ok = a < bound && b < bound;
    } else {
      ok = sqrt_lt_eps_plus_half(a, eps, dxy) && sqrt_lt_eps_plus_half(b, eps, dxy);
    }
    if (ok) return z;
  }
  return std::nullopt;
}

PointSet all_points(const FiniteMetricSpace& space) {
  PointSet points(space.size());
  for (int i = 0; i < space.size(); ++i) points[i] = i;
  return points;
}

Bitset full_bitset(int n) {
  Bitset bits(n);
  bits.set();
  return bits;
}

PointSet bitset_to_points(const Bitset& bits) {
  PointSet points;
  points.reserve(bits.count());
  for (auto p = bits.find_first(); p != Bitset::npos; p = bits.find_next(p)) {
    points.push_back(static_cast<int>(p));
  }
  return points;
}

Bitset points_to_bitset(const PointSet& points, int n) {
  Bitset bits(n);
  for (int p : points) bits.set(p);
  return bits;
}

}  // namespace besicover
