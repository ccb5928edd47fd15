#ifndef BESICOVER_COVERING_HPP
#define BESICOVER_COVERING_HPP

#include <optional>
#include <vector>

#include "besicover/metric_space.hpp"

namespace besicover {

struct CoverResult {
  std::vector<BallFamily> families;  // each internally pairwise-disjoint
  int m = 0;                         // = families.size()
  PointSet covered;                  // target points covered by the union
  PointSet leftover;                 // target points left over (normally empty)
};

// Repeated maximal-disjoint extraction at a single radius: every ball is
// B(a, r) for a point a of A, rounds scan uncovered centers in ascending
// index order. m is greedy-minimal, not certified minimal.
CoverResult equal_radius_cover(const FiniteMetricSpace& space, const PointSet& A,
                               const Rational& r, BallKind kind);

// On an ultrametric space, selects a pairwise disjoint subfamily of C that
// still covers A: take the first uncovered point of A, keep the largest ball
// of C containing it (ties: lowest center, then lowest position), repeat.
// Throws NotUltrametric / CoverIncomplete.
BallFamily ultrametric_greedy_disjoint_cover(const FiniteMetricSpace& space, const PointSet& A,
                                             const BallFamily& cover);

// Repeated maximal-disjoint extraction for radii in [r, R], splitting the
// radius range into dyadic buckets [2^(j-1) r, 2^j r] when R/r > 2 and
// concatenating the per-bucket families. With known_D set, asserts
// m <= max{D^2, ceil(log2(R/r)) * D^3} and throws BoundViolated otherwise.
CoverResult localized_cover(const FiniteMetricSpace& space, const PointSet& A,
                            const BallFamily& cover, const Rational& r, const Rational& R,
                            std::optional<int> known_D = std::nullopt);

// Dyadic radius buckets: generation n >= 1 holds radii in
// ((1/2)^(n+1) B, (1/2)^n B] where B = 2 * reference_R, so the reference
// radius itself lands in generation 1.
struct GenerationBucket {
  int n = 1;
  BallFamily balls;
};
std::vector<GenerationBucket> generation_buckets(const FiniteMetricSpace& space,
                                                 const BallFamily& family,
                                                 const Rational& reference_R);
int generation_of(const FiniteMetricSpace& space, const Rational& radius,
                  const Rational& reference_R);

struct BesicovitchCoverResult {
  BallFamily selected;
  Rational reference_R = 1;          // bucketing reference (max radius unless overridden)
  std::vector<int> per_generation_m; // families used at each processed stage
  int max_overlap = 0;
  int overlap_witness = -1;
  std::optional<Int> bound;          // L * C when both constants were supplied
};

// Generation-bucketed bounded-overlap subcover: stage k covers the not yet
// covered centers of generation-k balls through single-scale maximal-disjoint
// extraction, and the union of all stages is the selected subfamily. With
// known_L and known_C set, asserts max overlap <= L * C.
BesicovitchCoverResult besicovitch_cover(const FiniteMetricSpace& space, const PointSet& A,
                                         const BallFamily& cover,
                                         std::optional<int> known_L = std::nullopt,
                                         std::optional<int> known_C = std::nullopt,
                                         std::optional<Rational> reference_R = std::nullopt);

struct RearrangementResult {
  CoverResult cover;          // families partition the input subfamily
  bool midpoint_ok = false;   // approximate-midpoint spot check outcome
  bool bound_asserted = false;
  std::optional<Int> bound;   // L * D^6 + 1 when constants were supplied
};

// Partitions a bounded-overlap subfamily into disjoint families: each round
// walks the generations in order and keeps every ball disjoint from the
// round's previous picks; rounds repeat on the leftovers. The L*D^6+1 bound
// is asserted only when the space passes the midpoint spot check; otherwise
// a violation is recorded but not fatal.
RearrangementResult disjoint_rearrangement(const FiniteMetricSpace& space,
                                           const BallFamily& subcover,
                                           std::optional<int> known_L = std::nullopt,
                                           std::optional<int> known_D = std::nullopt,
                                           std::optional<Rational> reference_R = std::nullopt);

// First z (ascending) with y in B°(z, t) and B°(z, t) contained in B°(x, r);
// nothing when no such point exists (legitimate without midpoints).
std::optional<int> find_inner_ball(const FiniteMetricSpace& space, int x, const Rational& r,
                                   int y, const Rational& t);

// Sampled approximate-midpoint check: every sampled pair x, y with
// d(x, y) > 2 * min_distance must admit a d(x,y)/4-midpoint. Vacuously true
// when no pair qualifies; always false on Squared-scale spaces (the quarter
// distance is not rational there).
bool midpoint_spot_check(const FiniteMetricSpace& space, std::uint64_t seed = 0,
                         int samples = 64);

}  // namespace besicover

#endif
