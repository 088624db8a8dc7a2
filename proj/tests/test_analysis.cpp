#include "gsatlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gsatlab/rng.hpp"

using namespace gsat;

namespace {

Trace make_trace(const std::vector<int32_t>& deltas, uint32_t num_vars = 10,
                 uint32_t num_clauses = 40, int64_t initial_score = 30,
                 const std::vector<uint32_t>& poss_sizes = {}) {
  Trace t;
  t.num_vars = num_vars;
  t.num_clauses = num_clauses;
  t.width = 3;
  t.initial_score = initial_score;
  int64_t score = initial_score;
  for (size_t i = 0; i < deltas.size(); ++i) {
    score += deltas[i];
    uint32_t poss = i < poss_sizes.size() ? poss_sizes[i] : 1;
    t.flips.push_back({static_cast<uint32_t>(i + 1), 1, deltas[i], score,
                       poss, deltas[i]});
  }
  if (score == num_clauses && !deltas.empty())
    t.solved_at = static_cast<int32_t>(deltas.size());
  return t;
}

// Direct-scan restatement of the region definition, kept independent of
// the implementation under test.
struct OracleSeg {
  uint32_t climb_end;
  std::vector<PhaseRegion> regions;
  std::vector<int32_t> empty_j;
};

OracleSeg oracle_segment(const std::vector<int32_t>& d) {
  const uint32_t n = static_cast<uint32_t>(d.size());
  OracleSeg seg;
  seg.climb_end = n;
  for (uint32_t i = 0; i < n; ++i)
    if (d[i] < 1) {
      seg.climb_end = i;
      break;
    }
  int32_t max_j = 0;
  for (uint32_t i = 0; i < seg.climb_end; ++i) max_j = std::max(max_j, d[i]);
  for (int32_t j = max_j; j >= 1; --j) {
    uint32_t begin = n, end = n;
    for (uint32_t i = 0; i < n; ++i)
      if (d[i] == j) {
        begin = i;
        break;
      }
    for (uint32_t i = 0; i < n; ++i)
      if (d[i] < j) {
        end = i;
        break;
      }
    if (begin < end)
      seg.regions.push_back({j, begin, end});
    else
      seg.empty_j.push_back(j);
  }
  return seg;
}

}  // namespace

TEST_CASE("segmentation handles the canonical shapes") {
  {
    PhaseSegmentation s = segment_phases(make_trace({3, 3, 2, 1, 1, 0, 0}));
    CHECK(s.climb_end == 5);
    REQUIRE(s.regions.size() == 3);
    CHECK(s.regions[0] == PhaseRegion{3, 0, 2});
    CHECK(s.regions[1] == PhaseRegion{2, 2, 3});
    CHECK(s.regions[2] == PhaseRegion{1, 3, 5});
    CHECK(s.empty_j.empty());
  }
  {
    // A later +1 flip is a plateau improvement, not part of H_1.
    PhaseSegmentation s = segment_phases(make_trace({1, 0, 1, 0}));
    CHECK(s.climb_end == 1);
    REQUIRE(s.regions.size() == 1);
    CHECK(s.regions[0] == PhaseRegion{1, 0, 1});
  }
  {
    PhaseSegmentation s = segment_phases(make_trace({2, 2, 0}));
    CHECK(s.climb_end == 2);
    REQUIRE(s.regions.size() == 1);
    CHECK(s.regions[0] == PhaseRegion{2, 0, 2});
    CHECK(s.empty_j == std::vector<int32_t>{1});
  }
  {
    PhaseSegmentation s = segment_phases(make_trace({0, 1, 2}));
    CHECK(s.climb_end == 0);
    CHECK(s.regions.empty());
    CHECK(s.empty_j.empty());
  }
  {
    PhaseSegmentation s = segment_phases(make_trace({}));
    CHECK(s.climb_end == 0);
    CHECK(s.regions.empty());
  }
}

TEST_CASE("segmentation matches the direct-scan oracle") {
  SplitMix64 rng(555);
  for (int round = 0; round < 10000; ++round) {
    uint32_t len = static_cast<uint32_t>(rng.bounded(61));
    std::vector<int32_t> d(len);
    for (auto& x : d) x = static_cast<int32_t>(rng.bounded(10)) - 3;
    PhaseSegmentation got = segment_phases(make_trace(d));
    OracleSeg want = oracle_segment(d);
    REQUIRE(got.climb_end == want.climb_end);
    REQUIRE(got.regions == want.regions);
    REQUIRE(got.empty_j == want.empty_j);
  }
}

TEST_CASE("phase summary reproduces hand arithmetic") {
  // Region lengths 8, 4, 2, 1 for j = 1..4.
  std::vector<int32_t> d{4, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 0};
  std::vector<Trace> traces{make_trace(d)};
  PhaseSummary ps = phase_summary(traces);

  CHECK(ps.try_count == 1);
  CHECK(ps.mean_climb_length == doctest::Approx(15.0));
  CHECK(ps.sd_climb_length == 0.0);
  CHECK(ps.mean_gradient == doctest::Approx(26.0 / 15.0));
  CHECK(ps.gradient_try_count == 1);

  // H_j ends at flip index 15, 7, 3, 1; timeline closing steps 17, 9, 5, 3.
  REQUIRE(ps.phases.size() == 4);
  CHECK(ps.phases[0].j == 1);
  CHECK(ps.phases[0].mean_ratio == doctest::Approx(8.0 / 17.0));
  CHECK(ps.phases[0].mean_length == doctest::Approx(8.0));
  CHECK(ps.phases[1].j == 2);
  CHECK(ps.phases[1].mean_ratio == doctest::Approx(4.0 / 9.0));
  CHECK(ps.phases[2].j == 3);
  CHECK(ps.phases[2].mean_ratio == doctest::Approx(2.0 / 5.0));
  CHECK(ps.phases[3].j == 4);
  CHECK(ps.phases[3].mean_ratio == doctest::Approx(1.0 / 3.0));
  CHECK(ps.phases[3].mean_length == doctest::Approx(1.0));
}

TEST_CASE("phase summary pools only tries owning the region") {
  std::vector<Trace> traces{make_trace({2, 1, 0}), make_trace({1, 1, 0})};
  PhaseSummary ps = phase_summary(traces);
  REQUIRE(ps.phases.size() == 2);
  CHECK(ps.phases[0].j == 1);
  CHECK(ps.phases[0].try_count == 2);
  // Lengths 1 and 2; both H_1 close at flip index 2, timeline step 4.
  CHECK(ps.phases[0].mean_length == doctest::Approx(1.5));
  CHECK(ps.phases[0].mean_ratio == doctest::Approx(0.375));
  CHECK(ps.phases[0].sd_ratio ==
        doctest::Approx(std::sqrt(0.03125)).epsilon(1e-12));
  CHECK(ps.phases[0].sd_length ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(ps.phases[1].j == 2);
  CHECK(ps.phases[1].try_count == 1);
  CHECK(ps.phases[1].mean_length == doctest::Approx(1.0));
  CHECK(ps.phases[1].mean_ratio == doctest::Approx(1.0 / 3.0));
  // Gradients: 3/2 and 2/2.
  CHECK(ps.mean_gradient == doctest::Approx(1.25));
}

TEST_CASE("flip size histograms count pooled region flips") {
  // H_2 = [0,2); the later delta-2 flip inside H_1 is a size-2 flip there.
  std::vector<Trace> traces{make_trace({2, 2, 1, 2, 1, 0})};
  auto hists = flip_size_histograms(traces);
  REQUIRE(hists.size() == 2);
  CHECK(hists[0].j == 1);
  CHECK(hists[0].total_flips == 3);
  CHECK(hists[0].counts.at(1) == 2);
  CHECK(hists[0].counts.at(2) == 1);
  CHECK(hists[1].j == 2);
  CHECK(hists[1].total_flips == 2);
  CHECK(hists[1].counts.at(2) == 2);
}

TEST_CASE("aggregate curves pad finished tries and track active sets") {
  // num_vars 4, num_clauses 8.
  Trace t1 = make_trace({1, 1, 1}, 4, 8, 5, {2, 3, 1});  // ends at 8: solved
  Trace t2 = make_trace({1, 0}, 4, 8, 6, {4, 2});        // unsolved, short
  REQUIRE(t1.solved_at == 3);
  std::vector<Trace> traces{t1, t2};
  CurveSet cs = aggregate_curves(traces, 5);

  CHECK(cs.total_tries == 2);
  CHECK(cs.horizon == 5);
  REQUIRE(cs.mean_score_frac.size() == 6);

  CHECK(cs.mean_score_frac[0] == doctest::Approx(11.0 / 16.0));
  CHECK(cs.mean_score_frac[1] == doctest::Approx(13.0 / 16.0));
  CHECK(cs.mean_score_frac[2] == doctest::Approx(14.0 / 16.0));
  CHECK(cs.mean_score_frac[3] == doctest::Approx(15.0 / 16.0));
  CHECK(cs.mean_score_frac[4] == doctest::Approx(15.0 / 16.0));  // padded
  CHECK(cs.mean_score_frac[5] == doctest::Approx(15.0 / 16.0));

  CHECK(cs.active_tries == std::vector<uint32_t>{2, 2, 2, 1, 0, 0});
  CHECK(cs.mean_poss_frac[1] == doctest::Approx(6.0 / 8.0));
  CHECK(cs.mean_poss_frac[2] == doctest::Approx(5.0 / 8.0));
  CHECK(cs.mean_poss_frac[3] == doctest::Approx(1.0 / 4.0));
  CHECK(std::isnan(cs.mean_poss_frac[0]));
  CHECK(std::isnan(cs.mean_poss_frac[4]));
  CHECK(cs.mean_delta[1] == doctest::Approx(1.0));
  CHECK(cs.mean_delta[2] == doctest::Approx(0.5));
  CHECK(cs.mean_delta[3] == doctest::Approx(1.0));
  CHECK(std::isnan(cs.mean_delta[5]));
}

TEST_CASE("plateau check compares observed and predicted +1 rates") {
  Trace t = make_trace({1, 0, 1, 0}, 10, 40, 30);
  std::vector<Trace> traces{t};
  auto probes = plateau_flip_check(traces, 0.5, 1);
  REQUIRE(probes.size() == 4);
  CHECK(probes[0].x == 1);
  CHECK(probes[0].observed == doctest::Approx(1.0));
  CHECK(probes[1].observed == doctest::Approx(0.0));
  // predicted = (L - mean_score(x)) / (A N) with A = 0.5, N = 10.
  CHECK(probes[0].predicted == doctest::Approx((40.0 - 31.0) / 5.0));
  CHECK(probes[3].predicted == doctest::Approx((40.0 - 32.0) / 5.0));
}

TEST_CASE("success cost groups by problem size") {
  Trace t1 = make_trace({1, 1, 1}, 4, 8, 5);  // solved at 3
  Trace t2 = make_trace({1, 0}, 4, 8, 6);     // unsolved
  Trace t3;                                    // solved at the start
  t3.num_vars = 6;
  t3.num_clauses = 2;
  t3.initial_score = 2;
  t3.solved_at = 0;
  std::vector<Trace> traces{t1, t2, t3};
  auto costs = success_cost_summary(traces);
  REQUIRE(costs.size() == 2);
  CHECK(costs[0].num_vars == 4);
  CHECK(costs[0].tries == 2);
  CHECK(costs[0].solved == 1);
  CHECK(costs[0].success_rate == doctest::Approx(0.5));
  CHECK(costs[0].mean_flips_when_solved == doctest::Approx(3.0));
  CHECK(costs[0].flips_per_solution == doctest::Approx(5.0));
  CHECK(costs[1].num_vars == 6);
  CHECK(costs[1].success_rate == doctest::Approx(1.0));
  CHECK(costs[1].mean_flips_when_solved == doctest::Approx(0.0));
}

TEST_CASE("analysis rejects empty or mixed input") {
  std::vector<Trace> empty;
  CHECK_THROWS_AS(phase_summary(empty), std::invalid_argument);
  CHECK_THROWS_AS(aggregate_curves(empty, 10), std::invalid_argument);
  CHECK_THROWS_AS(success_cost_summary(empty), std::invalid_argument);

  std::vector<Trace> mixed{make_trace({1}, 4, 8, 5), make_trace({1}, 6, 8, 5)};
  CHECK_THROWS_AS(phase_summary(mixed), std::invalid_argument);
  CHECK_THROWS_AS(aggregate_curves(mixed, 10), std::invalid_argument);
}
