// Incremental GSAT engine: per-clause true-literal counts, per-variable
// score deltas, and a bucket structure giving O(1) access to the argmax set.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gsatlab/formula.hpp"

namespace gsat {

// Variables grouped by their current delta. Membership updates are O(1)
// swap-removes; the maximum is tracked with a lazily descending hint.
class DeltaBuckets {
 public:
  DeltaBuckets() = default;
  // max_abs_delta bounds |delta| for any variable (its occurrence count).
  DeltaBuckets(uint32_t num_vars, int32_t max_abs_delta);

  void assign_all(std::span<const int32_t> delta);  // delta indexed by var
  void update(Var v, int32_t new_delta);

  int32_t best_delta() const;
  std::span<const Var> best_set() const;

 private:
  size_t slot(int32_t delta) const {
    return static_cast<size_t>(delta + offset_);
  }

  int32_t offset_ = 0;
  std::vector<std::vector<Var>> buckets_;
  std::vector<uint32_t> position_;  // index of v inside its bucket
  std::vector<int32_t> current_;    // delta of v
  mutable int32_t max_hint_ = 0;
};

class SearchState {
 public:
  // The formula must outlive the state.
  SearchState(const Formula& f, Assignment initial);

  int64_t score() const { return score_; }
  const Assignment& assignment() const { return assignment_; }
  int32_t delta(Var v) const { return delta_[v]; }
  int32_t true_count(uint32_t clause) const { return true_count_[clause]; }

  // Maximum delta over all variables and the set achieving it, even when
  // the maximum is negative. Requires num_vars >= 1. The span is
  // invalidated by the next flip.
  int32_t best_delta() const { return buckets_.best_delta(); }
  std::span<const Var> poss_flips() const { return buckets_.best_set(); }

  // Flips v, updates score/deltas/counts touching only affected clauses,
  // and returns the delta that was applied.
  int32_t flip(Var v);

 private:
  void bump(Var v, int32_t amount);

  const Formula* formula_;
  Assignment assignment_;
  int64_t score_ = 0;
  std::vector<int32_t> true_count_;
  std::vector<int32_t> delta_;
  DeltaBuckets buckets_;
  std::vector<Var> touched_;
  std::vector<uint32_t> touch_stamp_;
  uint32_t stamp_ = 0;
};

struct FlipRecord {
  uint32_t flip_index;  // 1-based
  Var variable;
  int32_t delta_applied;
  int64_t score_after;
  uint32_t poss_size;
  int32_t best_delta;

  bool operator==(const FlipRecord&) const = default;
};

struct Trace {
  uint32_t problem_id = 0;
  uint32_t try_id = 0;
  uint32_t num_vars = 0;
  uint32_t num_clauses = 0;
  uint32_t width = 0;
  uint64_t seed = 0;
  int64_t initial_score = 0;
  int32_t solved_at = -1;  // flip index, 0 = initial assignment, -1 = never
  std::vector<FlipRecord> flips;

  bool operator==(const Trace&) const = default;
};

struct TryResult {
  Trace trace;
  std::optional<Assignment> solution;
};

// One GSAT try: random initial assignment from `seed`, then up to max_flips
// greedy flips with uniform tie-breaking, stopping early when satisfied.
TryResult run_try(const Formula& f, uint32_t max_flips, uint64_t seed,
                  uint32_t problem_id = 0, uint32_t try_id = 0);

struct GsatParams {
  uint32_t max_tries = 10;   // >= 1
  uint32_t max_flips = 100;  // >= 1
  bool record_traces = false;
};

struct GsatResult {
  std::optional<Assignment> assignment;
  uint32_t tries_used = 0;
  std::vector<Trace> traces;  // filled when record_traces is set
};

GsatResult run_gsat(const Formula& f, const GsatParams& params, uint64_t seed);

}  // namespace gsat
