#ifndef BESICOVER_GENERATORS_HPP
#define BESICOVER_GENERATORS_HPP

#include <cstdint>

#include "besicover/metric_space.hpp"

namespace besicover {

enum class LatticeNorm { L1, Linf, L2Squared };

// Points 1..N with d(i,j) = 1 - 1/max{i,j}; a bounded separable ultrametric.
FiniteMetricSpace make_paper_ultrametric(int n);

// N x N integer grid where points sharing a row or a column are at distance 1
// and every other distinct pair is at distance 2. Index of (x, y) is x*N + y.
FiniteMetricSpace make_grid_square(int n);

// n points, all pairwise distances equal to 1.
FiniteMetricSpace make_zero_one(int n);

// Regular lattice of `side` points per axis, centered at the origin.
// L2Squared stores squared distances (DistanceScale::Squared).
FiniteMetricSpace make_lattice(int dim, int side, LatticeNorm norm,
                               const Rational& spacing = Rational(1, 10));

// Random dendrogram ultrametric: clusters merge one at a time at strictly
// increasing heights k/n, merge order drawn from the seed.
FiniteMetricSpace make_random_ultrametric(int n, std::uint64_t seed);

int grid_index(int n, int x, int y);
std::pair<int, int> grid_coords(int n, int index);

}  // namespace besicover

#endif
