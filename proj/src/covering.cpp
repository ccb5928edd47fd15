#include "besicover/covering.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "besicover/errors.hpp"

namespace besicover {

namespace {

struct IndexedBall {
  int position = 0;  // position in the input family
  Ball ball;
  Bitset members;
};

// Canonical scan order for maximal-disjoint extraction: largest radius first,
// then lowest center index, then input position.
bool canonical_before(const IndexedBall& a, const IndexedBall& b) {
  if (a.ball.radius != b.ball.radius) return a.ball.radius > b.ball.radius;
  if (a.ball.center != b.ball.center) return a.ball.center < b.ball.center;
  return a.position < b.position;
}

std::vector<IndexedBall> index_family(const FiniteMetricSpace& space, const BallFamily& family) {
  std::vector<IndexedBall> indexed;
  indexed.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    indexed.push_back(IndexedBall{static_cast<int>(i), family[i],
                                  space.member_bitset(family[i])});
  }
  return indexed;
}

// Repeated maximal-disjoint extraction of balls centered at still-uncovered
// target points. Appends one family per round to `out` and marks covered
// target points in `covered`. Balls are scanned in canonical order.
void extract_rounds(const FiniteMetricSpace& space, std::vector<IndexedBall> candidates,
                    const Bitset& target, Bitset& covered, BallKind kind,
                    std::vector<BallFamily>& out) {
  std::sort(candidates.begin(), candidates.end(), canonical_before);
  Bitset uncovered = target - covered;
  while (uncovered.any()) {
    BallFamily family(kind);
    Bitset family_union(space.size());
    bool selected_any = false;
    for (const IndexedBall& cand : candidates) {
      if (!uncovered.test(cand.ball.center)) continue;
      if (family_union.intersects(cand.members)) continue;
      family.add(cand.ball);
      family_union |= cand.members;
      selected_any = true;
    }
    if (!selected_any) {
      throw Error(Errc::CoverIncomplete,
                  "cover is not centered at every target point; extraction stalled");
    }
    covered |= family_union & target;
    uncovered = target - covered;
    out.push_back(std::move(family));
  }
}

CoverResult finish_cover(std::vector<BallFamily> families, const Bitset& target,
                         const Bitset& covered) {
  CoverResult result;
  result.families = std::move(families);
  result.m = static_cast<int>(result.families.size());
  result.covered = bitset_to_points(covered & target);
  result.leftover = bitset_to_points(target - covered);
  return result;
}

}  // namespace

CoverResult equal_radius_cover(const FiniteMetricSpace& space, const PointSet& A,
                               const Rational& r, BallKind kind) {
  if (r <= 0) throw std::invalid_argument("equal_radius_cover requires r > 0");
  const Bitset target = points_to_bitset(A, space.size());
  Bitset covered(space.size());
  std::vector<BallFamily> families;
  if (target.any()) {
    BallFamily cover(kind);
    for (int a : A) cover.add(a, r);
    extract_rounds(space, index_family(space, cover), target, covered, kind, families);
  }
  return finish_cover(std::move(families), target, covered);
}

BallFamily ultrametric_greedy_disjoint_cover(const FiniteMetricSpace& space, const PointSet& A,
                                             const BallFamily& cover) {
  if (!space.ultrametric().ultra) {
    throw Error(Errc::NotUltrametric, "ultrametric greedy cover requires an ultrametric space");
  }
  const Bitset target = points_to_bitset(A, space.size());
  std::vector<IndexedBall> indexed = index_family(space, cover);
  Bitset covered(space.size());
  BallFamily selected(cover.kind());
  Bitset uncovered = target - covered;
  while (uncovered.any()) {
    const int x = static_cast<int>(uncovered.find_first());
    const IndexedBall* best = nullptr;
    for (const IndexedBall& cand : indexed) {
      if (!cand.members.test(x)) continue;
      if (best == nullptr || canonical_before(cand, *best)) best = &cand;
    }
    if (best == nullptr) {
      throw Error(Errc::CoverIncomplete, "family does not cover point " + space.label(x));
    }
    selected.add(best->ball);
    covered |= best->members;
    uncovered = target - covered;
  }
  return selected;
}

int generation_of(const FiniteMetricSpace& space, const Rational& radius,
                  const Rational& reference_R) {
  if (radius <= 0 || radius > reference_R) {
    throw Error(Errc::RadiusOutOfRange, "radius outside (0, R]");
  }
  // Bucket base is 2R, so generation n covers ((1/2)^(n+1) 2R, (1/2)^n 2R]
  // and the reference radius itself sits in generation 1.
  Rational upper = reference_R;
  int n = 1;
  while (radius <= space.half_radius(upper)) {
    upper = space.half_radius(upper);
    ++n;
  }
  return n;
}

std::vector<GenerationBucket> generation_buckets(const FiniteMetricSpace& space,
                                                 const BallFamily& family,
                                                 const Rational& reference_R) {
  std::vector<GenerationBucket> buckets;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const int n = generation_of(space, family[i].radius, reference_R);
    auto it = std::find_if(buckets.begin(), buckets.end(),
                           [&](const GenerationBucket& b) { return b.n == n; });
    if (it == buckets.end()) {
      buckets.push_back(GenerationBucket{n, BallFamily(family.kind())});
      it = buckets.end() - 1;
    }
    it->balls.add(family[i]);
  }
  std::sort(buckets.begin(), buckets.end(),
            [](const GenerationBucket& a, const GenerationBucket& b) { return a.n < b.n; });
  return buckets;
}

CoverResult localized_cover(const FiniteMetricSpace& space, const PointSet& A,
                            const BallFamily& cover, const Rational& r, const Rational& R,
                            std::optional<int> known_D) {
  if (r <= 0 || R < r) throw std::invalid_argument("localized_cover requires 0 < r <= R");
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (cover[i].radius < r || cover[i].radius > R) {
      throw Error(Errc::RadiusOutOfRange,
                  "ball radius " + to_string(cover[i].radius) + " outside [" + to_string(r) +
                      ", " + to_string(R) + "]");
    }
  }
  const Bitset target = points_to_bitset(A, space.size());
  std::vector<IndexedBall> indexed = index_family(space, cover);
  for (const IndexedBall& b : indexed) {
    if (!target.test(b.ball.center)) {
      throw std::invalid_argument("localized_cover: ball centered outside A");
    }
  }

  Bitset covered(space.size());
  std::vector<BallFamily> families;
  if (target.any()) {
    const int levels = r == R ? 1 : space.ceil_log2_ratio(R / r);
    if (levels <= 1) {
      extract_rounds(space, indexed, target, covered, cover.kind(), families);
    } else {
      // Dyadic split: bucket j holds radii in (2^(j-1) r, 2^j r], with the
      // lower endpoint included for j = 1. Buckets are processed in order and
      // their families concatenated.
      std::vector<std::vector<IndexedBall>> buckets(levels);
      for (const IndexedBall& b : indexed) {
        Rational upper = space.scale_radius(r, 2);
        int j = 0;
        while (b.ball.radius > upper && j + 1 < levels) {
          upper = space.scale_radius(upper, 2);
          ++j;
        }
        buckets[j].push_back(b);
      }
      for (int j = 0; j < levels; ++j) {
        if (buckets[j].empty()) continue;
        Bitset bucket_target(space.size());
        for (const IndexedBall& b : buckets[j]) bucket_target.set(b.ball.center);
        bucket_target &= target;
        bucket_target -= covered;
        if (bucket_target.none()) continue;
        extract_rounds(space, buckets[j], bucket_target, covered, cover.kind(), families);
      }
      if (!target.is_subset_of(covered)) {
        throw Error(Errc::CoverIncomplete, "cover is not centered at every target point");
      }
    }
  }
  CoverResult result = finish_cover(std::move(families), target, covered);
  if (known_D) {
    const Int d(*known_D);
    const int log_ratio = r == R ? 0 : space.ceil_log2_ratio(R / r);
    const Int bound = std::max(d * d, Int(log_ratio) * d * d * d);
    if (Int(result.m) > bound) {
      throw Error(Errc::BoundViolated, "localized cover used " + std::to_string(result.m) +
                                           " families, bound " + bound.str());
    }
  }
  return result;
}

BesicovitchCoverResult besicovitch_cover(const FiniteMetricSpace& space, const PointSet& A,
                                         const BallFamily& cover, std::optional<int> known_L,
                                         std::optional<int> known_C,
                                         std::optional<Rational> reference_R) {
  BesicovitchCoverResult result{BallFamily(cover.kind()), Rational(1), {}, 0, -1, std::nullopt};
  const Bitset target = points_to_bitset(A, space.size());
  std::vector<IndexedBall> indexed = index_family(space, cover);

  Bitset centered(space.size());
  Rational max_radius(0);
  for (const IndexedBall& b : indexed) {
    if (!target.test(b.ball.center)) {
      throw std::invalid_argument("besicovitch_cover: ball centered outside A");
    }
    centered.set(b.ball.center);
    max_radius = std::max(max_radius, b.ball.radius);
  }
  if (!target.is_subset_of(centered) && target.any()) {
    throw Error(Errc::CoverIncomplete, "some target point centers no ball");
  }
  if (target.none()) return result;

  result.reference_R = reference_R.value_or(max_radius);
  if (max_radius > result.reference_R) {
    throw Error(Errc::RadiusOutOfRange, "ball radius exceeds the bucketing reference R");
  }

  // Group balls by generation, then cover each stage's new centers with
  // single-scale extraction.
  std::map<int, std::vector<IndexedBall>> stages;
  for (const IndexedBall& b : indexed) {
    stages[generation_of(space, b.ball.radius, result.reference_R)].push_back(b);
  }
  Bitset covered(space.size());
  std::vector<Bitset> selected_members;
  for (auto& [gen, balls] : stages) {
    Bitset stage_target(space.size());
    for (const IndexedBall& b : balls) stage_target.set(b.ball.center);
    stage_target &= target;
    stage_target -= covered;
    if (stage_target.none()) {
      result.per_generation_m.push_back(0);
      continue;
    }
    std::vector<IndexedBall> candidates;
    for (const IndexedBall& b : balls) {
      if (stage_target.test(b.ball.center)) candidates.push_back(b);
    }
    std::vector<BallFamily> families;
    extract_rounds(space, candidates, stage_target, covered, cover.kind(), families);
    result.per_generation_m.push_back(static_cast<int>(families.size()));
    for (const BallFamily& family : families) {
      for (const Ball& ball : family.balls()) {
        result.selected.add(ball);
        selected_members.push_back(space.member_bitset(ball));
      }
    }
  }

  // Exact overlap of the selected subfamily.
  std::vector<int> depth(space.size(), 0);
  for (const Bitset& members : selected_members) {
    for (auto p = members.find_first(); p != Bitset::npos; p = members.find_next(p)) {
      ++depth[p];
    }
  }
  for (int p = 0; p < space.size(); ++p) {
    if (depth[p] > result.max_overlap) {
      result.max_overlap = depth[p];
      result.overlap_witness = p;
    }
  }
  if (known_L && known_C) {
    result.bound = Int(*known_L) * Int(*known_C);
    if (Int(result.max_overlap) > *result.bound) {
      throw Error(Errc::BoundViolated, "selected subfamily overlap " +
                                           std::to_string(result.max_overlap) + " exceeds " +
                                           result.bound->str());
    }
  }
  return result;
}

RearrangementResult disjoint_rearrangement(const FiniteMetricSpace& space,
                                           const BallFamily& subcover,
                                           std::optional<int> known_L,
                                           std::optional<int> known_D,
                                           std::optional<Rational> reference_R) {
  RearrangementResult result;
  if (subcover.empty()) {
    result.cover.m = 0;
    return result;
  }
  Rational max_radius(0);
  for (std::size_t i = 0; i < subcover.size(); ++i) {
    max_radius = std::max(max_radius, subcover[i].radius);
  }
  const Rational ref = reference_R.value_or(max_radius);

  std::vector<IndexedBall> indexed = index_family(space, subcover);
  std::vector<int> generation(indexed.size());
  for (std::size_t i = 0; i < indexed.size(); ++i) {
    generation[i] = generation_of(space, indexed[i].ball.radius, ref);
  }
  // Scan order: generation ascending, then canonical within a generation.
  std::vector<int> order(indexed.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (generation[a] != generation[b]) return generation[a] < generation[b];
    return canonical_before(indexed[a], indexed[b]);
  });

  std::vector<char> assigned(indexed.size(), 0);
  std::size_t remaining = indexed.size();
  Bitset all_covered(space.size());
  std::vector<BallFamily> families;
  while (remaining > 0) {
    BallFamily family(subcover.kind());
    Bitset family_union(space.size());
    for (int idx : order) {
      if (assigned[idx]) continue;
      if (family_union.intersects(indexed[idx].members)) continue;
      family.add(indexed[idx].ball);
      family_union |= indexed[idx].members;
      assigned[idx] = 1;
      --remaining;
    }
    all_covered |= family_union;
    families.push_back(std::move(family));
  }
  result.cover.families = std::move(families);
  result.cover.m = static_cast<int>(result.cover.families.size());
  result.cover.covered = bitset_to_points(all_covered);

  if (known_L && known_D) {
    const Int d(*known_D);
    result.bound = Int(*known_L) * d * d * d * d * d * d + 1;
    result.midpoint_ok = midpoint_spot_check(space);
    if (result.midpoint_ok) {
      result.bound_asserted = true;
      if (Int(result.cover.m) > *result.bound) {
        throw Error(Errc::BoundViolated, "rearrangement used " +
                                             std::to_string(result.cover.m) +
                                             " families, bound " + result.bound->str());
      }
    }
  }
  return result;
}

std::optional<int> find_inner_ball(const FiniteMetricSpace& space, int x, const Rational& r,
                                   int y, const Rational& t) {
  if (t <= 0 || t >= r) {
    throw Error(Errc::PreconditionViolated, "find_inner_ball requires 0 < t < r");
  }
  const Bitset outer = space.member_bitset(Ball{x, r, BallKind::Open});
  if (!outer.test(y)) {
    throw Error(Errc::PreconditionViolated, "y is not inside the open ball B(x, r)");
  }
  for (int z = 0; z < space.size(); ++z) {
    const Bitset inner = space.member_bitset(Ball{z, t, BallKind::Open});
    if (inner.test(y) && inner.is_subset_of(outer)) return z;
  }
  return std::nullopt;
}

bool midpoint_spot_check(const FiniteMetricSpace& space, std::uint64_t seed, int samples) {
  if (space.scale() == DistanceScale::Squared) return false;
  if (space.size() < 2) return true;
  const Rational threshold = 2 * space.min_distance();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, space.size() - 1);
  for (int i = 0; i < samples; ++i) {
    const int x = pick(rng);
    const int y = pick(rng);
    if (x == y) continue;
    const Rational& d = space.distance(x, y);
    if (d <= threshold) continue;
    if (!has_approx_midpoint(space, x, y, d / 4)) return false;
  }
  return true;
}

}  // namespace besicover
