#include "gsatlab/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gsatlab/reference.hpp"

using namespace gsat;

namespace {

Formula random_instance(SplitMix64& meta, uint32_t max_vars = 30) {
  GeneratorSpec spec;
  spec.num_vars = 5 + static_cast<uint32_t>(meta.bounded(max_vars - 4));
  spec.width =
      1 + static_cast<uint32_t>(meta.bounded(std::min(spec.num_vars, 5u)));
  spec.num_clauses = 1 + static_cast<uint32_t>(meta.bounded(
                             4 * spec.num_vars));
  spec.seed = meta.next();
  return generate_random_ksat(spec);
}

void check_state_against_reference(const Formula& f, const SearchState& st) {
  const Assignment& a = st.assignment();
  REQUIRE(st.score() == reference::score(f, a));
  std::vector<int32_t> tc = reference::true_counts(f, a);
  for (uint32_t c = 0; c < f.num_clauses(); ++c)
    REQUIRE(st.true_count(c) == tc[c]);
  std::vector<int32_t> deltas = reference::all_deltas(f, a);
  for (Var v = 1; v <= f.num_vars(); ++v) REQUIRE(st.delta(v) == deltas[v]);

  auto [best, set] = reference::poss_flips(f, a);
  REQUIRE(st.best_delta() == best);
  auto span = st.poss_flips();
  std::vector<Var> got(span.begin(), span.end());
  std::sort(got.begin(), got.end());
  REQUIRE(got == set);
}

}  // namespace

TEST_CASE("incremental state matches brute force along random walks") {
  SplitMix64 meta(2024);
  for (int round = 0; round < 300; ++round) {
    Formula f = random_instance(meta);
    SplitMix64 rng(meta.next());
    SearchState st(f, Assignment::random(f.num_vars(), rng));
    check_state_against_reference(f, st);
    for (int step = 0; step < 25; ++step) {
      Var v = static_cast<Var>(rng.bounded(f.num_vars())) + 1;
      int32_t expect = st.delta(v);
      int64_t before = st.score();
      int32_t applied = st.flip(v);
      CHECK(applied == expect);
      CHECK(st.score() == before + applied);
      CHECK(st.delta(v) == -applied);  // re-flip undoes the move
      check_state_against_reference(f, st);
    }
  }
}

TEST_CASE("flips touch only variables sharing a clause") {
  SplitMix64 meta(77);
  Formula f = random_instance(meta, 25);
  SplitMix64 rng(meta.next());
  SearchState st(f, Assignment::random(f.num_vars(), rng));

  std::vector<std::vector<bool>> neighbor(
      f.num_vars() + 1, std::vector<bool>(f.num_vars() + 1, false));
  for (uint32_t c = 0; c < f.num_clauses(); ++c)
    for (int32_t l1 : f.clause(c))
      for (int32_t l2 : f.clause(c))
        neighbor[std::abs(l1)][std::abs(l2)] = true;

  for (int step = 0; step < 200; ++step) {
    std::vector<int32_t> before(f.num_vars() + 1);
    for (Var u = 1; u <= f.num_vars(); ++u) before[u] = st.delta(u);
    Var v = static_cast<Var>(rng.bounded(f.num_vars())) + 1;
    st.flip(v);
    for (Var u = 1; u <= f.num_vars(); ++u)
      if (!neighbor[v][u]) CHECK(st.delta(u) == before[u]);
  }
}

TEST_CASE("long plateau walk conserves the involution invariant") {
  GeneratorSpec spec;
  spec.num_vars = 100;
  spec.num_clauses = 430;
  spec.width = 3;
  spec.seed = 4242;
  Formula f = generate_random_ksat(spec);
  SplitMix64 rng(1);
  SearchState st(f, Assignment::random(100, rng));
  for (int step = 0; step < 10000; ++step) {
    Var v = static_cast<Var>(rng.bounded(100)) + 1;
    int32_t applied = st.flip(v);
    CHECK(st.delta(v) == -applied);
    if (step % 500 == 0) check_state_against_reference(f, st);
  }
  check_state_against_reference(f, st);
}

TEST_CASE("single unsatisfied clause worked example") {
  Formula f(3, {{1, 2, 3}});
  SearchState st(f, Assignment(3));  // all false
  CHECK(st.score() == 0);
  CHECK(st.best_delta() == 1);
  auto span = st.poss_flips();
  std::vector<Var> set(span.begin(), span.end());
  std::sort(set.begin(), set.end());
  CHECK(set == std::vector<Var>{1, 2, 3});

  int32_t applied = st.flip(1);
  CHECK(applied == 1);
  CHECK(st.score() == 1);
  CHECK(st.delta(1) == -1);
  CHECK(st.delta(2) == 0);
  CHECK(st.delta(3) == 0);
}

TEST_CASE("poss flips covers all variables on a flat landscape") {
  Formula f(5, {{1, 2, 3}});
  Assignment a(5);
  a.set(1, true);
  a.set(2, true);
  SearchState st(f, a);
  CHECK(st.score() == 1);
  CHECK(st.best_delta() == 0);
  CHECK(st.poss_flips().size() == 5);
}

TEST_CASE("run_try is deterministic and internally consistent") {
  GeneratorSpec spec;
  spec.num_vars = 60;
  spec.num_clauses = 258;
  spec.width = 3;
  spec.seed = 10;
  Formula f = generate_random_ksat(spec);

  TryResult r1 = run_try(f, 150, 555, 4, 9);
  TryResult r2 = run_try(f, 150, 555, 4, 9);
  CHECK(r1.trace == r2.trace);

  const Trace& t = r1.trace;
  CHECK(t.problem_id == 4);
  CHECK(t.try_id == 9);
  CHECK(t.num_vars == 60);
  CHECK(t.num_clauses == 258);
  CHECK(t.width == 3);
  CHECK(t.seed == 555);

  int64_t running = t.initial_score;
  for (size_t i = 0; i < t.flips.size(); ++i) {
    const FlipRecord& r = t.flips[i];
    CHECK(r.flip_index == i + 1);
    CHECK(r.variable >= 1);
    CHECK(r.variable <= 60);
    CHECK(r.poss_size >= 1);
    CHECK(r.poss_size <= 60);
    CHECK(r.delta_applied == r.best_delta);  // greedy picks from the argmax set
    running += r.delta_applied;
    CHECK(r.score_after == running);
  }
  if (t.solved_at > 0) {
    CHECK(static_cast<size_t>(t.solved_at) == t.flips.size());
    CHECK(t.flips.back().score_after == 258);
    REQUIRE(r1.solution.has_value());
    CHECK(reference::score(f, *r1.solution) == 258);
  }
}

TEST_CASE("different seeds give different trajectories") {
  GeneratorSpec spec;
  spec.num_vars = 40;
  spec.num_clauses = 172;
  spec.width = 3;
  spec.seed = 2;
  Formula f = generate_random_ksat(spec);
  TryResult a = run_try(f, 100, 1);
  TryResult b = run_try(f, 100, 2);
  CHECK_FALSE(a.trace == b.trace);
}

TEST_CASE("empty formula solves at the initial assignment") {
  Formula f = generate_random_ksat({.num_vars = 5, .num_clauses = 0,
                                    .width = 3, .seed = 1});
  TryResult r = run_try(f, 10, 3);
  CHECK(r.trace.solved_at == 0);
  CHECK(r.trace.flips.empty());
  CHECK(r.trace.initial_score == 0);
  REQUIRE(r.solution.has_value());
}

TEST_CASE("run_gsat finds the single-clause solution immediately") {
  Formula f(1, {{1}});
  GsatParams params;
  params.max_tries = 2;
  params.max_flips = 1;
  GsatResult res = run_gsat(f, params, 17);
  REQUIRE(res.assignment.has_value());
  CHECK(res.assignment->value(1));
  CHECK(res.tries_used >= 1);
}

TEST_CASE("run_gsat reports failure on a contradiction") {
  Formula f(1, {{1}, {-1}});
  GsatParams params;
  params.max_tries = 3;
  params.max_flips = 50;
  params.record_traces = true;
  GsatResult res = run_gsat(f, params, 8);
  CHECK_FALSE(res.assignment.has_value());
  CHECK(res.tries_used == 3);
  REQUIRE(res.traces.size() == 3);
  for (const Trace& t : res.traces) {
    CHECK(t.solved_at == -1);
    CHECK(t.initial_score == 1);  // exactly one of the two clauses holds
    for (const FlipRecord& r : t.flips) CHECK(r.score_after == 1);
  }
}

TEST_CASE("run_gsat solves easy instances within a few tries") {
  GeneratorSpec spec;
  spec.num_vars = 50;
  spec.num_clauses = 100;  // well below the hard region
  spec.width = 3;
  spec.seed = 900;
  Formula f = generate_random_ksat(spec);
  GsatParams params;
  params.max_tries = 10;
  params.max_flips = 500;
  GsatResult res = run_gsat(f, params, 31);
  REQUIRE(res.assignment.has_value());
  CHECK(reference::score(f, *res.assignment) == f.num_clauses());
}

TEST_CASE("parameter validation") {
  Formula f(1, {{1}});
  CHECK_THROWS_AS(run_try(f, 0, 1), std::invalid_argument);
  GsatParams bad_tries{.max_tries = 0, .max_flips = 5};
  CHECK_THROWS_AS(run_gsat(f, bad_tries, 1), std::invalid_argument);
  GsatParams bad_flips{.max_tries = 5, .max_flips = 0};
  CHECK_THROWS_AS(run_gsat(f, bad_flips, 1), std::invalid_argument);
  CHECK_THROWS_AS(SearchState(f, Assignment(2)), std::invalid_argument);
}
