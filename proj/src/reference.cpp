#include "gsatlab/reference.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gsat::reference {

int64_t score(const Formula& f, const Assignment& a) {
  int64_t sat = 0;
  for (uint32_t c = 0; c < f.num_clauses(); ++c) {
    bool any = false;
    for (int32_t lit : f.clause(c))
      any = any || (a.value(static_cast<Var>(std::abs(lit))) == (lit > 0));
    if (any) ++sat;
  }
  return sat;
}

std::vector<int32_t> true_counts(const Formula& f, const Assignment& a) {
  std::vector<int32_t> tc(f.num_clauses(), 0);
  for (uint32_t c = 0; c < f.num_clauses(); ++c)
    for (int32_t lit : f.clause(c))
      if (a.value(static_cast<Var>(std::abs(lit))) == (lit > 0)) ++tc[c];
  return tc;
}

int32_t flip_delta(const Formula& f, const Assignment& a, Var v) {
  Assignment b = a;
  b.flip(v);
  return static_cast<int32_t>(reference::score(f, b) - reference::score(f, a));
}

std::vector<int32_t> all_deltas(const Formula& f, const Assignment& a) {
  std::vector<int32_t> d(f.num_vars() + 1, 0);
  for (Var v = 1; v <= f.num_vars(); ++v) d[v] = flip_delta(f, a, v);
  return d;
}

std::pair<int32_t, std::vector<Var>> poss_flips(const Formula& f,
                                                const Assignment& a) {
  if (f.num_vars() == 0)
    throw std::invalid_argument("poss_flips requires at least one variable");
  std::vector<int32_t> d = all_deltas(f, a);
  int32_t best = d[1];
  for (Var v = 2; v <= f.num_vars(); ++v)
    if (d[v] > best) best = d[v];
  std::vector<Var> set;
  for (Var v = 1; v <= f.num_vars(); ++v)
    if (d[v] == best) set.push_back(v);
  return {best, std::move(set)};
}

TryResult run_try_rescan(const Formula& f, uint32_t max_flips, uint64_t seed,
                         uint32_t problem_id, uint32_t try_id) {
  if (max_flips == 0) throw std::invalid_argument("max_flips must be >= 1");
  SplitMix64 rng(seed);
  Assignment a = Assignment::random(f.num_vars(), rng);

  TryResult result;
  Trace& trace = result.trace;
  trace.problem_id = problem_id;
  trace.try_id = try_id;
  trace.num_vars = f.num_vars();
  trace.num_clauses = f.num_clauses();
  trace.width = f.width();
  trace.seed = seed;
  trace.initial_score = reference::score(f, a);

  const int64_t target = f.num_clauses();
  int64_t current = trace.initial_score;
  if (current == target) {
    trace.solved_at = 0;
    result.solution = a;
    return result;
  }
  for (uint32_t x = 1; x <= max_flips; ++x) {
    auto [best, set] = poss_flips(f, a);
    Var v = set[rng.bounded(set.size())];
    a.flip(v);
    current += best;
    trace.flips.push_back(
        {x, v, best, current, static_cast<uint32_t>(set.size()), best});
    if (current == target) {
      trace.solved_at = static_cast<int32_t>(x);
      result.solution = a;
      break;
    }
  }
  return result;
}

}  // namespace gsat::reference
