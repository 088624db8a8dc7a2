// Phase segmentation of traces and aggregate statistics across tries.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gsatlab/engine.hpp"

namespace gsat {

// Half-open interval of 0-based flip positions with delta pattern H_j.
struct PhaseRegion {
  int32_t j = 0;
  uint32_t begin = 0;
  uint32_t end = 0;

  uint32_t length() const { return end - begin; }
  bool operator==(const PhaseRegion&) const = default;
};

struct PhaseSegmentation {
  // Number of flips before the first flip with delta < 1 (the climbing
  // phase); everything at or after this position belongs to H_0, including
  // later +1 improvements.
  uint32_t climb_end = 0;
  // Nonempty H_j in time order (descending j). H_j starts at the first flip
  // with delta == j and ends at the first subsequent flip with delta < j.
  std::vector<PhaseRegion> regions;
  // j in 1..max-climbing-delta whose region is empty.
  std::vector<int32_t> empty_j;
};

PhaseSegmentation segment_phases(const Trace& trace);

struct PhaseStats {
  int32_t j = 0;
  uint32_t try_count = 0;  // tries with nonempty H_j
  // length(H_j) over the timeline position of the region's closing step.
  // The timeline counts the initial assignment as the first step and each
  // flip as one step; H_j closes at its first sub-j flip, so a region
  // ending at flip index e (0-based) closes at timeline position e + 2.
  double mean_ratio = 0;
  double sd_ratio = 0;
  double mean_length = 0;  // flips with delta >= j inside the region
  double sd_length = 0;
};

struct PhaseSummary {
  uint32_t try_count = 0;
  double mean_climb_length = 0;  // flips with delta >= 1 before H_0
  double sd_climb_length = 0;
  // Mean over tries of (score gained during climb / climb length),
  // restricted to tries with a nonempty climb.
  double mean_gradient = 0;
  double sd_gradient = 0;
  uint32_t gradient_try_count = 0;
  std::vector<PhaseStats> phases;  // ascending j, only observed j
};

PhaseSummary phase_summary(std::span<const Trace> traces);

// Distribution of delta values over all flips falling inside H_j, pooled
// across tries.
struct FlipSizeHistogram {
  int32_t j = 0;
  int64_t total_flips = 0;
  std::map<int32_t, int64_t> counts;
};

std::vector<FlipSizeHistogram> flip_size_histograms(
    std::span<const Trace> traces);

// Per-flip aggregate curves. Index x runs 0..horizon. Scores are padded:
// a try shorter than the horizon keeps contributing its final score (for
// solved tries that is num_clauses). Poss and delta average only over
// tries still running at x and are NaN where none are.
struct CurveSet {
  uint32_t num_vars = 0;
  uint32_t num_clauses = 0;
  uint32_t width = 0;
  uint32_t horizon = 0;
  uint32_t total_tries = 0;
  std::vector<double> mean_score_frac;  // of num_clauses
  std::vector<double> mean_poss_frac;   // of num_vars
  std::vector<double> mean_delta;
  std::vector<uint32_t> active_tries;
};

CurveSet aggregate_curves(std::span<const Trace> traces, uint32_t horizon);

// Compares the observed frequency of +1 flips among active tries at each
// x >= window_lo with the prediction (num_clauses - mean_score(x)) /
// (decay_constant * num_vars) from the score-curve model.
struct PlateauProbe {
  uint32_t x = 0;
  double observed = 0;
  double predicted = 0;
  uint32_t active_tries = 0;
};

std::vector<PlateauProbe> plateau_flip_check(std::span<const Trace> traces,
                                             double decay_constant,
                                             uint32_t window_lo);

// Restart-cost summary grouped by problem size, for sweeps where traces
// span several num_vars values.
struct SuccessCost {
  uint32_t num_vars = 0;
  uint32_t tries = 0;
  uint32_t solved = 0;
  double success_rate = 0;
  double mean_flips_when_solved = 0;  // over solving tries
  double flips_per_solution = 0;      // all flips spent / solutions
};

std::vector<SuccessCost> success_cost_summary(std::span<const Trace> traces);

}  // namespace gsat
