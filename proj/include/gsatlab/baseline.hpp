// Reference results for random 3-SAT and the tolerances the acceptance
// suite enforces. Report verdicts use the same constants so the two can
// never drift apart.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

namespace gsat::baseline {

struct ScoreFitRef {
  double ratio;            // clauses per variable
  double decay;            // A
  double asymptote;        // B
  double amplitude;        // C
  double r_squared;
  double satisfied_frac;   // B / ratio
};

inline constexpr ScoreFitRef kScoreFits[] = {
    {3.0, 0.511, 2.997, 0.0428, 0.995, 1.000},
    {4.3, 0.566, 4.27, 0.0772, 0.995, 0.993},
    {6.0, 0.492, 5.89, 0.112, 0.993, 0.982},
};

struct PossFitRef {
  double ratio;
  double decay;      // D
  double asymptote;  // E
  double amplitude;  // F
  double r_squared;
  double e_tolerance;  // absolute
};

inline constexpr PossFitRef kPossFits[] = {
    {4.3, 0.838, 0.100, 0.0348, 0.996, 0.02},
    {6.0, 0.789, 0.0502, 0.0373, 0.999, 0.015},
};

// Climbing-phase statistics at N = 500, ratio 4.3.
struct PhaseRef {
  int32_t j;
  double mean_ratio;
  double sd_ratio;
  double mean_length;
  double sd_length;
};

inline constexpr PhaseRef kPhases[] = {
    {1, 0.486, 0.0510, 54.7, 7.69},
    {2, 0.513, 0.0672, 29.5, 5.12},
    {3, 0.564, 0.0959, 15.7, 3.61},
    {4, 0.574, 0.0161, 7.00, 2.48},
};

inline constexpr double kClimbMeanLength = 112.0;  // N = 500, ratio 4.3
inline constexpr double kClimbSd = 7.59;
inline constexpr double kClimbLo = 101.0;
inline constexpr double kClimbHi = 123.0;
inline constexpr double kPhaseRatioTol = 0.05;   // absolute
inline constexpr double kPhaseLengthTol = 0.15;  // relative

struct GradientRef {
  uint32_t num_vars;
  double mean;
  double sd;
  double lo;  // acceptance interval
  double hi;
};

inline constexpr GradientRef kGradients[] = {
    {500, 1.94, 0.1, 1.8, 2.1},
    {100, 1.95, 0.2, 1.7, 2.2},
};

// Eq. 4 fits at N = 500, ratio 4.3; accepted within a factor of two.
struct RegionDecayRef {
  int32_t j;
  double decay;      // D_j
  double amplitude;  // E_j
  double r_squared;
};

inline constexpr RegionDecayRef kRegionDecays[] = {
    {1, 0.045, 0.25, 0.968},
    {2, 0.025, 0.15, 0.975},
};

inline constexpr double kRegionDecayFactor = 2.0;
inline constexpr double kRegionR2Floor = 0.9;

// Multi-variable flip frequencies inside climbing regions.
inline constexpr double kSize2InH1 = 0.098;
inline constexpr double kSize2InH1Lo = 0.07;
inline constexpr double kSize2InH1Hi = 0.13;
inline constexpr double kSize3InH2 = 0.063;
inline constexpr double kSize3InH2Lo = 0.04;
inline constexpr double kSize3InH2Hi = 0.09;
inline constexpr double kSizeJPlus2Cap = 0.002;

inline constexpr double kScoreBTol = 0.02;        // relative
inline constexpr double kScoreATol = 0.20;        // relative
inline constexpr double kScoreCTol = 0.25;        // relative
inline constexpr double kSatisfiedFracTol = 0.004;  // absolute
inline constexpr double kFitR2Floor = 0.98;

inline constexpr double kInitialScoreFracLo = 0.870;
inline constexpr double kInitialScoreFracHi = 0.880;

inline constexpr double kScalingCollapseTol = 0.01;

// Plateau poss-flips levels quoted for orientation (no tolerance attached).
inline constexpr double kPlateauPossFrac43 = 0.10;
inline constexpr double kPlateauPossFrac6 = 0.05;

inline bool within_abs(double value, double target, double tol) {
  return std::abs(value - target) <= tol;
}

inline bool within_rel(double value, double target, double tol) {
  return std::abs(value - target) <= tol * std::abs(target);
}

inline bool within_factor(double value, double target, double factor) {
  if (value <= 0 || target <= 0) return false;
  double q = value / target;
  return q <= factor && q >= 1.0 / factor;
}

inline bool within_range(double value, double lo, double hi) {
  return value >= lo && value <= hi;
}

inline std::optional<ScoreFitRef> score_fit_ref(double ratio) {
  for (const auto& r : kScoreFits)
    if (std::abs(r.ratio - ratio) < 0.05) return r;
  return std::nullopt;
}

inline std::optional<PossFitRef> poss_fit_ref(double ratio) {
  for (const auto& r : kPossFits)
    if (std::abs(r.ratio - ratio) < 0.05) return r;
  return std::nullopt;
}

inline std::optional<GradientRef> gradient_ref(uint32_t num_vars) {
  for (const auto& r : kGradients)
    if (r.num_vars == num_vars) return r;
  return std::nullopt;
}

}  // namespace gsat::baseline
