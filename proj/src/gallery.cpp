#include "besicover/gallery.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "besicover/besicovitch.hpp"
#include "besicover/covering.hpp"
#include "besicover/doubling.hpp"
#include "besicover/errors.hpp"
#include "besicover/generators.hpp"
#include "besicover/sampling.hpp"

namespace besicover {

namespace {

void add_check(GalleryReport& report, const std::string& name, bool pass,
               const std::string& detail) {
  report.checks.push_back(GalleryCheck{name, pass, detail});
}

std::string fmt_int(long value) { return std::to_string(value); }

// --- counter07: nested closed balls B(i, 1 - 1/i) = {1, ..., i} ------------

GalleryReport run_counter07(int n) {
  if (n < 4) throw Error(Errc::PreconditionViolated, "counter07 needs N >= 4");
  GalleryReport report{"counter07", n, {}, false};
  const FiniteMetricSpace space = make_paper_ultrametric(n);

  add_check(report, "ultrametric", space.ultrametric().ultra,
            "strong triangle inequality on all triples of 1..N");

  BallFamily nested(BallKind::Closed);
  bool members_ok = true;
  bool nesting_ok = true;
  bool core_ok = true;
  Bitset previous;
  for (int i = 2; i <= n; ++i) {
    const Ball ball{i - 1, Rational(i - 1, i), BallKind::Closed};
    nested.add(ball);
    Bitset expect(space.size());
    for (int j = 0; j < i; ++j) expect.set(j);
    const Bitset got = space.member_bitset(ball);
    if (got != expect) members_ok = false;
    if (i > 2 && !previous.is_subset_of(got)) nesting_ok = false;
    if (!got.test(0) || !got.test(1)) core_ok = false;
    previous = got;
  }
  add_check(report, "closed_ball_members", members_ok,
            "B_cl(i, 1-1/i) = {1,...,i} for every 2 <= i <= " + fmt_int(n));
  add_check(report, "nesting_chain", nesting_ok, "B_cl(2) through B_cl(N) form a chain");
  add_check(report, "common_core", core_ok, "points 1 and 2 lie in every ball of the family");

  bool open_ok = true;
  for (int i = 2; i <= n; ++i) {
    // radius 1 - 1/(i + 2^-i) = (i 2^i + 1 - 2^i) / (i 2^i + 1)
    const Int pow = Int(1) << i;
    const Int den = Int(i) * pow + 1;
    const Ball open_ball{i - 1, Rational(den - pow, den), BallKind::Open};
    const Ball closed_ball{i - 1, Rational(i - 1, i), BallKind::Closed};
    if (!same_member_set(space, open_ball, closed_ball)) open_ok = false;
  }
  add_check(report, "open_variant", open_ok,
            "open balls with radii 1 - 1/(i + 2^-i) realize the same member sets");

  const OverlapReport overlap = max_overlap(space, nested);
  const bool overlap_ok =
      overlap.max_overlap == n - 1 && (overlap.witness_point == 0 || overlap.witness_point == 1);
  add_check(report, "overlap_growth", overlap_ok,
            "full nested family overlaps " + fmt_int(overlap.max_overlap) + " times at point " +
                space.label(std::max(overlap.witness_point, 0)) + " (expected N-1 = " +
                fmt_int(n - 1) + ")");

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const GalleryCheck& c) { return c.pass; });
  return report;
}

// --- notSBCP: the cross metric on an N x N grid ----------------------------

bool general_position(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  return a.first != b.first && a.second != b.second;
}

GalleryReport run_not_sbcp(int n) {
  if (n < 4) throw Error(Errc::PreconditionViolated, "notSBCP needs N >= 4");
  GalleryReport report{"notSBCP", n, {}, false};
  const FiniteMetricSpace space = make_grid_square(n);

  add_check(report, "metric_valid", space.validation().valid,
            "d(x,y) <= 2 <= d(x,z) + d(z,y) for distinct triples");

  // Exhaustive triple-intersection emptiness: a violating triple of unit
  // balls at pairwise general-position centers would have to show up among
  // the centers whose cross contains some grid point w.
  bool triples_ok = true;
  long triples_checked = 0;
  for (int wx = 0; wx < n && triples_ok; ++wx) {
    for (int wy = 0; wy < n && triples_ok; ++wy) {
      std::vector<std::pair<int, int>> containing;
      for (int a = 0; a < n; ++a) {
        if (a != wx) containing.emplace_back(a, wy);
      }
      for (int b = 0; b < n; ++b) containing.emplace_back(wx, b);
      const int m = static_cast<int>(containing.size());
      for (int i = 0; i < m && triples_ok; ++i) {
        for (int j = i + 1; j < m && triples_ok; ++j) {
          if (!general_position(containing[i], containing[j])) continue;
          for (int k = j + 1; k < m; ++k) {
            ++triples_checked;
            if (general_position(containing[i], containing[k]) &&
                general_position(containing[j], containing[k])) {
              triples_ok = false;
              break;
            }
          }
        }
      }
    }
  }
  add_check(report, "triple_intersection_empty", triples_ok,
            "no grid point lies in three unit balls at general-position centers (" +
                fmt_int(triples_checked) + " triples examined)");

  bool pair_overlap_ok = true;
  int worst_overlap = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = i;
    std::shuffle(rows.begin(), rows.end(), rng);
    BallFamily family(BallKind::Closed);
    for (int i = 0; i < n; ++i) {
      if (std::uniform_int_distribution<int>(0, 99)(rng) < 70) {
        family.add(grid_index(n, i, rows[i]), Rational(1));
      }
    }
    if (family.empty()) family.add(grid_index(n, 0, rows[0]), Rational(1));
    const OverlapReport overlap = max_overlap(space, family);
    worst_overlap = std::max(worst_overlap, overlap.max_overlap);
    if (overlap.max_overlap > 2) pair_overlap_ok = false;
  }
  add_check(report, "general_position_overlap", pair_overlap_ok,
            "10 seeded general-position unit-ball families overlap at most 2 (worst " +
                fmt_int(worst_overlap) + ")");

  bool diag_ok = true;
  for (int i = 0; i < n && diag_ok; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Bitset meet = space.member_bitset(Ball{grid_index(n, i, i), Rational(1), BallKind::Closed}) &
                          space.member_bitset(Ball{grid_index(n, j, j), Rational(1), BallKind::Closed});
      Bitset expect(space.size());
      expect.set(grid_index(n, i, j));
      expect.set(grid_index(n, j, i));
      if (meet != expect) {
        diag_ok = false;
        break;
      }
    }
  }
  add_check(report, "diagonal_pair_intersections", diag_ok,
            "B_cl((i,i),1) meets B_cl((j,j),1) exactly in {(i,j),(j,i)}");

  int subcover_runs = 0;
  const bool subcover_ok = [&]() {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      std::mt19937_64 rng(seed);
      const PointSet A = sample_nonempty_subset(space.size(), rng, 30);
      std::vector<Rational> radii(space.size(), Rational(1));
      for (int a : A) {
        radii[a] = std::uniform_int_distribution<int>(0, 1)(rng) ? Rational(1) : Rational(1, 2);
      }
      if (seed % 5 == 0) radii[A[sample_index(rng, static_cast<int>(A.size()))]] = Rational(2);

      // The explicit subcover: a radius-2 ball covers everything by itself;
      // otherwise select unit balls in lexicographic center order, skipping
      // covered centers, then add the sub-unit balls of uncovered points.
      BallFamily selected(BallKind::Closed);
      int radius2 = -1;
      for (int a : A) {
        if (radii[a] == 2) {
          radius2 = a;
          break;
        }
      }
      if (radius2 >= 0) {
        selected.add(radius2, Rational(2));
      } else {
        Bitset covered(space.size());
        for (int a : A) {  // ascending index = lexicographic center order
          if (radii[a] != 1 || covered.test(a)) continue;
          selected.add(a, Rational(1));
          covered |= space.member_bitset(Ball{a, Rational(1), BallKind::Closed});
        }
        for (int a : A) {
          if (!covered.test(a)) selected.add(a, radii[a]);
        }
      }
      const OverlapReport overlap = max_overlap(space, selected);
      Bitset covered(space.size());
      for (const Ball& b : selected.balls()) covered |= space.member_bitset(b);
      ++subcover_runs;
      for (int a : A) {
        if (!covered.test(a)) return false;
      }
      if (overlap.max_overlap > 2) return false;
    }
    return true;
  }();
  add_check(report, "explicit_subcover", subcover_ok,
            "lexicographic unit-ball selection plus sub-unit leftovers keeps 1 <= overlap <= 2 (" +
                fmt_int(subcover_runs) + " seeded subsets)");

  PointSet diagonal;
  for (int i = 0; i < n; ++i) diagonal.push_back(grid_index(n, i, i));
  const CoverResult eq = equal_radius_cover(space, diagonal, Rational(1), BallKind::Closed);
  add_check(report, "equal_radius_diagonal", eq.m == n,
            "equal-radius cover of the diagonal needs m = " + fmt_int(eq.m) + " families (N = " +
                fmt_int(n) + ")");

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const GalleryCheck& c) { return c.pass; });
  return report;
}

// --- discrete: the 0-1 metric ----------------------------------------------

GalleryReport run_discrete(int n) {
  if (n < 2) throw Error(Errc::PreconditionViolated, "discrete needs n >= 2");
  GalleryReport report{"discrete", n, {}, false};
  const FiniteMetricSpace space = make_zero_one(n);

  add_check(report, "ultrametric", space.ultrametric().ultra, "0-1 metric is ultrametric");

  bool big_ok = true;
  for (const Rational& r : {Rational(3, 2), Rational(2)}) {
    for (int x = 0; x < n; ++x) {
      if (space.member_bitset(Ball{x, r, BallKind::Open}).count() != static_cast<std::size_t>(n)) {
        big_ok = false;
      }
    }
  }
  add_check(report, "large_open_balls", big_ok, "open balls of radius > 1 are the whole space");

  bool small_ok = true;
  for (const Rational& r : {Rational(1, 2), Rational(1)}) {
    for (int x = 0; x < n && small_ok; ++x) {
      const Bitset members = space.member_bitset(Ball{x, r, BallKind::Open});
      if (members.count() != 1 || !members.test(x)) small_ok = false;
    }
  }
  add_check(report, "small_open_balls_disjoint", small_ok,
            "open balls of radius <= 1 are singletons, hence pairwise disjoint");

  const DoublingReport doubling = doubling_constant(space, BallKind::Open, CoverMethod::Exact);
  add_check(report, "doubling_equals_n",
            doubling.D == n && doubling.method == CoverMethod::Exact,
            "open doubling constant D = " + fmt_int(doubling.D) + " (points: " + fmt_int(n) + ")");

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const GalleryCheck& c) { return c.pass; });
  return report;
}

// --- eqrad_ultra: equal-radius covers on random dendrograms ----------------

GalleryReport run_eqrad_ultra(int n) {
  if (n < 2) throw Error(Errc::PreconditionViolated, "eqrad_ultra needs n >= 2");
  GalleryReport report{"eqrad_ultra", n, {}, false};
  for (const BallKind kind : {BallKind::Closed, BallKind::Open}) {
    bool all_single = true;
    bool all_disjoint = true;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const FiniteMetricSpace space = make_random_ultrametric(n, seed);
      std::mt19937_64 rng(seed * 977);
      const PointSet A = sample_nonempty_subset(n, rng, 60);
      const Rational r = sample_value(space.critical_radii(), rng);
      const CoverResult cover = equal_radius_cover(space, A, r, kind);
      if (cover.m != 1 || !cover.leftover.empty()) all_single = false;
      if (cover.m >= 1) {
        const auto& balls = cover.families.front().balls();
        std::vector<Bitset> members;
        members.reserve(balls.size());
        for (const Ball& b : balls) members.push_back(space.member_bitset(b));
        for (std::size_t i = 0; i < members.size() && all_disjoint; ++i) {
          for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[i].intersects(members[j])) {
              all_disjoint = false;
              break;
            }
          }
        }
      }
    }
    const std::string kind_name = to_cstring(kind);
    add_check(report, "single_family_" + kind_name, all_single,
              "10 seeded dendrograms: one disjoint family suffices (kind: " + kind_name + ")");
    add_check(report, "selected_disjoint_" + kind_name, all_disjoint,
              "selected equal-radius balls are pairwise disjoint (kind: " + kind_name + ")");
  }
  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const GalleryCheck& c) { return c.pass; });
  return report;
}

// --- constants_chain: doubling + Besicovitch constants on lattices ---------

void chain_on_space(GalleryReport& report, const std::string& tag,
                    const FiniteMetricSpace& space) {
  const DoublingReport doubling = doubling_constant(space, BallKind::Closed, CoverMethod::Exact);
  const BesicovitchReport bes = besicovitch_constant(space, BallKind::Closed);
  const Int d(doubling.D);
  const Int overlap_bound = Int(bes.L) * d * d * d;
  const Int m_bound = Int(bes.L) * d * d * d * d * d * d + 1;

  bool overlap_ok = true;
  bool rearrange_ok = true;
  int worst_overlap = 0;
  int worst_m = 0;
  const std::vector<Rational> radii =
      radii_in_range(space, space.min_distance(), space.scale_radius(space.min_distance(), 6));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed * 31 + 7);
    const PointSet A = sample_nonempty_subset(space.size(), rng, 50);
    const BallFamily cover = sample_centered_cover(A, radii, BallKind::Closed, rng);
    try {
      const BesicovitchCoverResult picked =
          besicovitch_cover(space, A, cover, bes.L, doubling.D * doubling.D * doubling.D);
      worst_overlap = std::max(worst_overlap, picked.max_overlap);
      const RearrangementResult arranged =
          disjoint_rearrangement(space, picked.selected, bes.L, doubling.D, picked.reference_R);
      worst_m = std::max(worst_m, arranged.cover.m);
      if (arranged.midpoint_ok && Int(arranged.cover.m) > m_bound) rearrange_ok = false;
    } catch (const Error&) {
      overlap_ok = false;
      rearrange_ok = false;
    }
  }
  add_check(report, tag + "_overlap_bound", overlap_ok,
            tag + ": worst selected overlap " + fmt_int(worst_overlap) + " <= L*D^3 = " +
                overlap_bound.str() + " (L=" + fmt_int(bes.L) + ", D=" + fmt_int(doubling.D) +
                ")");
  add_check(report, tag + "_rearrangement_bound", rearrange_ok,
            tag + ": worst family count " + fmt_int(worst_m) + " <= L*D^6+1 = " + m_bound.str());
}

GalleryReport run_constants_chain(int n) {
  if (n < 4) throw Error(Errc::PreconditionViolated, "constants_chain needs N >= 4");
  GalleryReport report{"constants_chain", n, {}, false};
  chain_on_space(report, "lattice_1d", make_lattice(1, n, LatticeNorm::Linf));
  chain_on_space(report, "lattice_2d", make_lattice(2, std::min(n, 7), LatticeNorm::Linf));
  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const GalleryCheck& c) { return c.pass; });
  return report;
}

}  // namespace

GalleryReport run_case(const std::string& case_id, int n) {
  if (case_id == "counter07") return run_counter07(n);
  if (case_id == "notSBCP") return run_not_sbcp(n);
  if (case_id == "discrete") return run_discrete(n);
  if (case_id == "eqrad_ultra") return run_eqrad_ultra(n);
  if (case_id == "constants_chain") return run_constants_chain(n);
  throw Error(Errc::UnknownCase, "unknown gallery case '" + case_id + "'");
}

const std::vector<std::string>& gallery_case_ids() {
  static const std::vector<std::string> ids = {"counter07", "notSBCP", "discrete", "eqrad_ultra",
                                               "constants_chain"};
  return ids;
}

Json gallery_report_to_json(const GalleryReport& report) {
  Json doc;
  doc["case"] = report.case_id;
  doc["N"] = report.n;
  Json checks = Json::array();
  for (const GalleryCheck& check : report.checks) {
    checks.push_back(Json{{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
  }
  doc["checks"] = std::move(checks);
  doc["all_pass"] = report.all_pass;
  return doc;
}

}  // namespace besicover
