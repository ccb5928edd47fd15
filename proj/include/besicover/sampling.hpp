#ifndef BESICOVER_SAMPLING_HPP
#define BESICOVER_SAMPLING_HPP

#include <random>

#include "besicover/metric_space.hpp"

namespace besicover {

// Seeded helpers shared by the gallery, the acceptance suite and the CLI.
// All draws go through std::mt19937_64 so identical seeds reproduce
// identical instances everywhere.

PointSet sample_nonempty_subset(int n, std::mt19937_64& rng, int percent_keep = 50);

int sample_index(std::mt19937_64& rng, int size);

const Rational& sample_value(const std::vector<Rational>& values, std::mt19937_64& rng);

// Critical radii of the space restricted to [lo, hi].
std::vector<Rational> radii_in_range(const FiniteMetricSpace& space, const Rational& lo,
                                     const Rational& hi);

// One ball per point of A with a radius drawn from `radii`, plus an extra
// ball per point with probability extra_percent/100.
BallFamily sample_centered_cover(const PointSet& A, const std::vector<Rational>& radii,
                                 BallKind kind, std::mt19937_64& rng, int extra_percent = 25);

// Ball with a random center and radius 4s for a random realized distance s,
// so that two rounds of halving stay on realized radii.
Ball sample_doubling_ball(const FiniteMetricSpace& space, BallKind kind, std::mt19937_64& rng);

}  // namespace besicover

#endif
