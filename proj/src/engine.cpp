#include "gsatlab/engine.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gsat {

DeltaBuckets::DeltaBuckets(uint32_t num_vars, int32_t max_abs_delta)
    : offset_(max_abs_delta),
      buckets_(2 * static_cast<size_t>(max_abs_delta) + 1),
      position_(num_vars + 1, 0),
      current_(num_vars + 1, 0) {}

void DeltaBuckets::assign_all(std::span<const int32_t> delta) {
  for (auto& b : buckets_) b.clear();
  max_hint_ = -offset_;
  uint32_t num_vars = static_cast<uint32_t>(position_.size() - 1);
  for (Var v = 1; v <= num_vars; ++v) {
    int32_t d = delta[v];
    current_[v] = d;
    auto& b = buckets_[slot(d)];
    position_[v] = static_cast<uint32_t>(b.size());
    b.push_back(v);
    if (d > max_hint_) max_hint_ = d;
  }
}

void DeltaBuckets::update(Var v, int32_t new_delta) {
  int32_t old_delta = current_[v];
  if (old_delta == new_delta) return;
  auto& old_bucket = buckets_[slot(old_delta)];
  uint32_t pos = position_[v];
  Var moved = old_bucket.back();
  old_bucket[pos] = moved;
  position_[moved] = pos;
  old_bucket.pop_back();
  auto& new_bucket = buckets_[slot(new_delta)];
  position_[v] = static_cast<uint32_t>(new_bucket.size());
  new_bucket.push_back(v);
  current_[v] = new_delta;
  if (new_delta > max_hint_) max_hint_ = new_delta;
}

int32_t DeltaBuckets::best_delta() const {
  while (buckets_[slot(max_hint_)].empty()) --max_hint_;
  return max_hint_;
}

std::span<const Var> DeltaBuckets::best_set() const {
  const auto& b = buckets_[slot(best_delta())];
  return {b.data(), b.size()};
}

SearchState::SearchState(const Formula& f, Assignment initial)
    : formula_(&f),
      assignment_(std::move(initial)),
      true_count_(f.num_clauses(), 0),
      delta_(f.num_vars() + 1, 0),
      buckets_(f.num_vars(),
               static_cast<int32_t>(f.max_occurrences() == 0
                                        ? 1
                                        : f.max_occurrences())),
      touch_stamp_(f.num_vars() + 1, 0) {
  if (assignment_.num_vars() != f.num_vars())
    throw std::invalid_argument("assignment size mismatch");
  for (uint32_t c = 0; c < f.num_clauses(); ++c) {
    int32_t tc = 0;
    for (int32_t lit : f.clause(c))
      if (assignment_.value(static_cast<Var>(std::abs(lit))) == (lit > 0))
        ++tc;
    true_count_[c] = tc;
    if (tc > 0) {
      ++score_;
      if (tc == 1) {
        for (int32_t lit : f.clause(c))
          if (assignment_.value(static_cast<Var>(std::abs(lit))) ==
              (lit > 0)) {
            --delta_[static_cast<Var>(std::abs(lit))];
            break;
          }
      }
    } else {
      for (int32_t lit : f.clause(c))
        ++delta_[static_cast<Var>(std::abs(lit))];
    }
  }
  buckets_.assign_all(delta_);
  touched_.reserve(f.max_occurrences() * 4 + 8);
}

void SearchState::bump(Var v, int32_t amount) {
  delta_[v] += amount;
  if (touch_stamp_[v] != stamp_) {
    touch_stamp_[v] = stamp_;
    touched_.push_back(v);
  }
}

int32_t SearchState::flip(Var v) {
  const Formula& f = *formula_;
  int32_t applied = delta_[v];
  bool old_val = assignment_.value(v);
  assignment_.flip(v);
  ++stamp_;
  touched_.clear();

  for (uint32_t entry : f.occurrences(v)) {
    uint32_t c = entry >> 1;
    bool positive = (entry & 1u) != 0;
    if (old_val == positive) {
      // Literal of v in c turns false.
      int32_t tc = --true_count_[c];
      if (tc == 0) {
        --score_;
        for (int32_t lit : f.clause(c))
          bump(static_cast<Var>(std::abs(lit)), +1);
        bump(v, +1);
      } else if (tc == 1) {
        for (int32_t lit : f.clause(c)) {
          Var w = static_cast<Var>(std::abs(lit));
          if (assignment_.value(w) == (lit > 0)) {
            bump(w, -1);
            break;
          }
        }
      }
    } else {
      // Literal of v in c turns true.
      int32_t tc = ++true_count_[c];
      if (tc == 1) {
        ++score_;
        for (int32_t lit : f.clause(c))
          bump(static_cast<Var>(std::abs(lit)), -1);
        bump(v, -1);
      } else if (tc == 2) {
        for (int32_t lit : f.clause(c)) {
          Var w = static_cast<Var>(std::abs(lit));
          if (w != v && assignment_.value(w) == (lit > 0)) {
            bump(w, +1);
            break;
          }
        }
      }
    }
  }

  for (Var u : touched_) buckets_.update(u, delta_[u]);
  return applied;
}

TryResult run_try(const Formula& f, uint32_t max_flips, uint64_t seed,
                  uint32_t problem_id, uint32_t try_id) {
  if (max_flips == 0) throw std::invalid_argument("max_flips must be >= 1");
  SplitMix64 rng(seed);
  SearchState state(f, Assignment::random(f.num_vars(), rng));

  TryResult result;
  Trace& trace = result.trace;
  trace.problem_id = problem_id;
  trace.try_id = try_id;
  trace.num_vars = f.num_vars();
  trace.num_clauses = f.num_clauses();
  trace.width = f.width();
  trace.seed = seed;
  trace.initial_score = state.score();

  const int64_t target = f.num_clauses();
  if (state.score() == target) {
    trace.solved_at = 0;
    result.solution = state.assignment();
    return result;
  }
  trace.flips.reserve(max_flips);
  for (uint32_t x = 1; x <= max_flips; ++x) {
    int32_t best = state.best_delta();
    auto set = state.poss_flips();
    uint32_t poss_size = static_cast<uint32_t>(set.size());
    Var v = set[rng.bounded(poss_size)];
    int32_t applied = state.flip(v);
    trace.flips.push_back(
        {x, v, applied, state.score(), poss_size, best});
    if (state.score() == target) {
      trace.solved_at = static_cast<int32_t>(x);
      result.solution = state.assignment();
      break;
    }
  }
  return result;
}

GsatResult run_gsat(const Formula& f, const GsatParams& params,
                    uint64_t seed) {
  if (params.max_tries == 0) throw std::invalid_argument("max_tries must be >= 1");
  if (params.max_flips == 0) throw std::invalid_argument("max_flips must be >= 1");
  GsatResult result;
  for (uint32_t t = 0; t < params.max_tries; ++t) {
    uint64_t try_seed = derive_stream_seed(seed, "try", 0, t);
    TryResult r = run_try(f, params.max_flips, try_seed, 0, t);
    ++result.tries_used;
    if (params.record_traces) result.traces.push_back(std::move(r.trace));
    if (r.solution) {
      result.assignment = std::move(r.solution);
      break;
    }
  }
  return result;
}

}  // namespace gsat
