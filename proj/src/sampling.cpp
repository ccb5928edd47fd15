#include "besicover/sampling.hpp"

#include <stdexcept>

namespace besicover {

PointSet sample_nonempty_subset(int n, std::mt19937_64& rng, int percent_keep) {
  std::uniform_int_distribution<int> coin(0, 99);
  PointSet subset;
  for (int i = 0; i < n; ++i) {
    if (coin(rng) < percent_keep) subset.push_back(i);
  }
  if (subset.empty()) subset.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
  return subset;
}

int sample_index(std::mt19937_64& rng, int size) {
  if (size <= 0) throw std::invalid_argument("sample_index on empty range");
  return std::uniform_int_distribution<int>(0, size - 1)(rng);
}

const Rational& sample_value(const std::vector<Rational>& values, std::mt19937_64& rng) {
  if (values.empty()) throw std::invalid_argument("sample_value on empty pool");
  return values[sample_index(rng, static_cast<int>(values.size()))];
}

std::vector<Rational> radii_in_range(const FiniteMetricSpace& space, const Rational& lo,
                                     const Rational& hi) {
  std::vector<Rational> result;
  for (const Rational& r : space.critical_radii()) {
    if (r >= lo && r <= hi) result.push_back(r);
  }
  return result;
}

BallFamily sample_centered_cover(const PointSet& A, const std::vector<Rational>& radii,
                                 BallKind kind, std::mt19937_64& rng, int extra_percent) {
  if (radii.empty()) throw std::invalid_argument("sample_centered_cover needs candidate radii");
  std::uniform_int_distribution<int> coin(0, 99);
  BallFamily family(kind);
  for (int a : A) {
    family.add(a, sample_value(radii, rng));
    if (coin(rng) < extra_percent) family.add(a, sample_value(radii, rng));
  }
  return family;
}

Ball sample_doubling_ball(const FiniteMetricSpace& space, BallKind kind, std::mt19937_64& rng) {
  const auto& realized = space.realized_distances();
  if (realized.empty()) throw std::invalid_argument("space has a single point");
  const Rational& s = sample_value(realized, rng);
  const int center = sample_index(rng, space.size());
  return Ball{center, space.scale_radius(s, 4), kind};
}

}  // namespace besicover
