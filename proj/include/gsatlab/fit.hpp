// Least-squares fits of the decay models. All three models share one
// nonlinear parameter (the decay constant); offset and amplitude fall out
// of closed-form weighted linear least squares at each candidate.
#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "gsatlab/analysis.hpp"

namespace gsat {

struct ExpFitResult {
  double decay_constant = 0;  // in units of num_vars flips; NaN if degenerate
  double asymptote = 0;
  double amplitude = 0;
  double r_squared = 0;  // 1 - SSE/SST
  double sse = 0;
  double window_lo = 0;
  double window_hi = 0;
  uint32_t points = 0;
  bool degenerate = false;  // data carried no decaying component
};

struct ExpFitOptions {
  double decay_lo = 1e-3;
  double decay_hi = 1e2;
  uint32_t grid_points = 600;
  // When set, the offset is pinned and only the amplitude is free.
  std::optional<double> fixed_offset;
};

// Fits y = offset + amplitude * exp(-x / (decay * scale_n)) over points
// with window_lo <= x <= window_hi, finite y, and weight > 0. The decay
// constant is located on a logarithmic grid and refined by golden-section
// search. Throws std::runtime_error when fewer than 10 points qualify.
ExpFitResult fit_exponential(std::span<const double> xs,
                             std::span<const double> ys,
                             std::span<const double> weights, double scale_n,
                             double window_lo, double window_hi,
                             const ExpFitOptions& options = {});

// Mean satisfied clauses per variable vs flips:
// S(x)/N = B - C exp(-x / (A N)). Unweighted over curve points in window.
ExpFitResult fit_score_model(const CurveSet& curves, double window_lo,
                             double window_hi);

// Mean poss-flips fraction vs flips: P(x)/N = E + F exp(-x / (D N)).
ExpFitResult fit_poss_model(const CurveSet& curves, double window_lo,
                            double window_hi);

// Mean delta inside H_j vs offset into the region, offset pinned at j:
// delta(x) = j + E_j exp(-x / (D_j N)). The region's first flip (delta
// exactly j) is skipped, so x starts at 1. Each x is weighted by the
// number of tries whose H_j reaches that offset.
ExpFitResult fit_region_decay(std::span<const Trace> traces, int32_t j);

}  // namespace gsat
