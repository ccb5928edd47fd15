#include "besicover/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace besicover {

namespace {

std::vector<std::vector<Rational>> zero_table(int n) {
  return std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0)));
}

}  // namespace

FiniteMetricSpace make_paper_ultrametric(int n) {
  if (n < 1) throw std::invalid_argument("make_paper_ultrametric requires n >= 1");
  auto table = zero_table(n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int m = std::max(i, j) + 1;
      table[i][j] = table[j][i] = Rational(m - 1, m);  // 1 - 1/max
    }
  }
  return FiniteMetricSpace::from_table(std::move(labels), std::move(table));
}

FiniteMetricSpace make_grid_square(int n) {
  if (n < 1) throw std::invalid_argument("make_grid_square requires n >= 1");
  const int count = n * n;
  auto table = zero_table(count);
  std::vector<std::string> labels(count);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      labels[grid_index(n, x, y)] = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
  }
  for (int a = 0; a < count; ++a) {
    const auto [x1, y1] = grid_coords(n, a);
    for (int b = a + 1; b < count; ++b) {
      const auto [x2, y2] = grid_coords(n, b);
      table[a][b] = table[b][a] = (x1 == x2 || y1 == y2) ? Rational(1) : Rational(2);
    }
  }
  return FiniteMetricSpace::from_table(std::move(labels), std::move(table));
}

FiniteMetricSpace make_zero_one(int n) {
  if (n < 1) throw std::invalid_argument("make_zero_one requires n >= 1");
  auto table = zero_table(n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) table[i][j] = table[j][i] = Rational(1);
  }
  return FiniteMetricSpace::from_table(std::move(labels), std::move(table));
}

FiniteMetricSpace make_lattice(int dim, int side, LatticeNorm norm, const Rational& spacing) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("make_lattice supports dim in 1..3");
  if (side < 1) throw std::invalid_argument("make_lattice requires side >= 1");
  if (spacing <= 0) throw std::invalid_argument("make_lattice requires spacing > 0");
  int count = 1;
  for (int d = 0; d < dim; ++d) count *= side;

  // Integer coordinates of point i along each axis, centered around 0 via the
  // offset (side-1)/2 applied symbolically through rationals.
  const Rational offset = Rational(side - 1, 2);
  std::vector<std::vector<int>> coords(count, std::vector<int>(dim));
  for (int i = 0; i < count; ++i) {
    int rest = i;
    for (int d = dim - 1; d >= 0; --d) {
      coords[i][d] = rest % side;
      rest /= side;
    }
  }
  std::vector<std::string> labels(count);
  for (int i = 0; i < count; ++i) {
    std::string label = "(";
    for (int d = 0; d < dim; ++d) {
      if (d > 0) label += ",";
      label += to_string((Rational(coords[i][d]) - offset) * spacing);
    }
    label += ")";
    labels[i] = label;
  }

  auto table = zero_table(count);
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      Rational value(0);
      switch (norm) {
        case LatticeNorm::L1: {
          long sum = 0;
          for (int d = 0; d < dim; ++d) sum += std::abs(coords[a][d] - coords[b][d]);
          value = Rational(sum) * spacing;
          break;
        }
        case LatticeNorm::Linf: {
          long best = 0;
          for (int d = 0; d < dim; ++d) {
            best = std::max<long>(best, std::abs(coords[a][d] - coords[b][d]));
          }
          value = Rational(best) * spacing;
          break;
        }
        case LatticeNorm::L2Squared: {
          long sum = 0;
          for (int d = 0; d < dim; ++d) {
            const long delta = coords[a][d] - coords[b][d];
            sum += delta * delta;
          }
          value = Rational(sum) * spacing * spacing;
          break;
        }
      }
      table[a][b] = table[b][a] = value;
    }
  }
  const DistanceScale scale =
      norm == LatticeNorm::L2Squared ? DistanceScale::Squared : DistanceScale::Plain;
  return FiniteMetricSpace::from_table(std::move(labels), std::move(table), scale);
}

FiniteMetricSpace make_random_ultrametric(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("make_random_ultrametric requires n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> cluster(n);
  std::vector<int> alive;
  for (int i = 0; i < n; ++i) {
    cluster[i] = i;
    alive.push_back(i);
  }
  auto table = zero_table(n);
  for (int step = 1; step < n; ++step) {
    std::uniform_int_distribution<std::size_t> pick(0, alive.size() - 1);
    std::size_t ai = pick(rng);
    std::size_t bi = pick(rng);
    while (bi == ai) bi = pick(rng);
    const int keep = alive[std::min(ai, bi)];
    const int gone = alive[std::max(ai, bi)];
    const Rational height(step, n);
    for (int i = 0; i < n; ++i) {
      if (cluster[i] != gone) continue;
      for (int j = 0; j < n; ++j) {
        if (cluster[j] == keep) table[i][j] = table[j][i] = height;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (cluster[i] == gone) cluster[i] = keep;
    }
    alive.erase(alive.begin() + static_cast<long>(std::max(ai, bi)));
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
  return FiniteMetricSpace::from_table(std::move(labels), std::move(table));
}

int grid_index(int n, int x, int y) { return x * n + y; }

std::pair<int, int> grid_coords(int n, int index) { return {index / n, index % n}; }

}  // namespace besicover
