// Brute-force rescanning counterparts of the incremental engine. Slow by
// design; used as the test oracle and as the serial baseline in benchmarks.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsatlab/engine.hpp"
#include "gsatlab/formula.hpp"

namespace gsat::reference {

int64_t score(const Formula& f, const Assignment& a);
std::vector<int32_t> true_counts(const Formula& f, const Assignment& a);

// Score change from flipping v, by scoring both assignments.
int32_t flip_delta(const Formula& f, const Assignment& a, Var v);
std::vector<int32_t> all_deltas(const Formula& f, const Assignment& a);

// Maximum delta and the variables achieving it, in ascending order.
std::pair<int32_t, std::vector<Var>> poss_flips(const Formula& f,
                                                const Assignment& a);

// GSAT try with identical selection semantics but full rescans per flip.
// Tie-break order inside the poss set differs from the incremental engine,
// so trajectories are not comparable seed-for-seed; distributions are.
TryResult run_try_rescan(const Formula& f, uint32_t max_flips, uint64_t seed,
                         uint32_t problem_id = 0, uint32_t try_id = 0);

}  // namespace gsat::reference
