#include "gsatlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gsat {

namespace {

double mean_of(double sum, uint64_t n) {
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

double sd_of(double sum, double sum_sq, uint64_t n) {
  if (n < 2) return 0.0;
  double m = sum / static_cast<double>(n);
  double var = (sum_sq - static_cast<double>(n) * m * m) /
               static_cast<double>(n - 1);
  return var > 0 ? std::sqrt(var) : 0.0;
}

void check_uniform(std::span<const Trace> traces) {
  if (traces.empty())
    throw std::invalid_argument("analysis requires at least one trace");
  for (const Trace& t : traces)
    if (t.num_vars != traces.front().num_vars ||
        t.num_clauses != traces.front().num_clauses)
      throw std::invalid_argument("analysis requires uniform problem shape");
}

}  // namespace

PhaseSegmentation segment_phases(const Trace& trace) {
  const auto& flips = trace.flips;
  const uint32_t n = static_cast<uint32_t>(flips.size());

  PhaseSegmentation seg;
  seg.climb_end = n;
  for (uint32_t i = 0; i < n; ++i)
    if (flips[i].delta_applied < 1) {
      seg.climb_end = i;
      break;
    }

  int32_t max_j = 0;
  for (uint32_t i = 0; i < seg.climb_end; ++i)
    max_j = std::max(max_j, flips[i].delta_applied);

  for (int32_t j = max_j; j >= 1; --j) {
    uint32_t begin = n;
    for (uint32_t i = 0; i < n; ++i)
      if (flips[i].delta_applied == j) {
        begin = i;
        break;
      }
    uint32_t end = n;
    for (uint32_t i = 0; i < n; ++i)
      if (flips[i].delta_applied < j) {
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

PhaseSummary phase_summary(std::span<const Trace> traces) {
  check_uniform(traces);
  const size_t n_traces = traces.size();
  std::vector<PhaseSegmentation> segs(n_traces);
#pragma omp parallel for schedule(static)
  for (size_t i = 0; i < n_traces; ++i) segs[i] = segment_phases(traces[i]);

  PhaseSummary out;
  out.try_count = static_cast<uint32_t>(n_traces);

  double climb_sum = 0, climb_sq = 0;
  double grad_sum = 0, grad_sq = 0;
  uint64_t grad_n = 0;

  struct Acc {
    uint64_t n = 0;
    double ratio_sum = 0, ratio_sq = 0;
    double len_sum = 0, len_sq = 0;
  };
  std::map<int32_t, Acc> acc;

  for (size_t i = 0; i < n_traces; ++i) {
    const PhaseSegmentation& seg = segs[i];
    double climb = seg.climb_end;
    climb_sum += climb;
    climb_sq += climb * climb;
    if (seg.climb_end > 0) {
      int64_t gained = 0;
      for (uint32_t p = 0; p < seg.climb_end; ++p)
        gained += traces[i].flips[p].delta_applied;
      double g = static_cast<double>(gained) / climb;
      grad_sum += g;
      grad_sq += g * g;
      ++grad_n;
    }
    for (const PhaseRegion& r : seg.regions) {
      Acc& a = acc[r.j];
      double len = r.length();
      // Closing step on the try timeline: initial assignment, then flips,
      // through the first sub-j flip (at 0-based flip index r.end).
      double ratio = len / static_cast<double>(r.end + 2);
      ++a.n;
      a.ratio_sum += ratio;
      a.ratio_sq += ratio * ratio;
      a.len_sum += len;
      a.len_sq += len * len;
    }
  }

  out.mean_climb_length = mean_of(climb_sum, n_traces);
  out.sd_climb_length = sd_of(climb_sum, climb_sq, n_traces);
  out.mean_gradient = mean_of(grad_sum, grad_n);
  out.sd_gradient = sd_of(grad_sum, grad_sq, grad_n);
  out.gradient_try_count = static_cast<uint32_t>(grad_n);

  for (const auto& [j, a] : acc) {
    PhaseStats st;
    st.j = j;
    st.try_count = static_cast<uint32_t>(a.n);
    st.mean_ratio = mean_of(a.ratio_sum, a.n);
    st.sd_ratio = sd_of(a.ratio_sum, a.ratio_sq, a.n);
    st.mean_length = mean_of(a.len_sum, a.n);
    st.sd_length = sd_of(a.len_sum, a.len_sq, a.n);
    out.phases.push_back(st);
  }
  return out;
}

std::vector<FlipSizeHistogram> flip_size_histograms(
    std::span<const Trace> traces) {
  check_uniform(traces);
  std::map<int32_t, FlipSizeHistogram> hist;
  for (const Trace& t : traces) {
    PhaseSegmentation seg = segment_phases(t);
    for (const PhaseRegion& r : seg.regions) {
      FlipSizeHistogram& h = hist[r.j];
      h.j = r.j;
      for (uint32_t p = r.begin; p < r.end; ++p) {
        ++h.counts[t.flips[p].delta_applied];
        ++h.total_flips;
      }
    }
  }
  std::vector<FlipSizeHistogram> out;
  out.reserve(hist.size());
  for (auto& [j, h] : hist) out.push_back(std::move(h));
  return out;
}

CurveSet aggregate_curves(std::span<const Trace> traces, uint32_t horizon) {
  check_uniform(traces);
  const Trace& first = traces.front();

  CurveSet cs;
  cs.num_vars = first.num_vars;
  cs.num_clauses = first.num_clauses;
  cs.width = first.width;
  cs.horizon = horizon;
  cs.total_tries = static_cast<uint32_t>(traces.size());

  std::vector<int64_t> score_sum(horizon + 1, 0);
  std::vector<int64_t> poss_sum(horizon + 1, 0);
  std::vector<int64_t> delta_sum(horizon + 1, 0);
  std::vector<uint32_t> active(horizon + 1, 0);

  for (const Trace& t : traces) {
    const uint32_t len = static_cast<uint32_t>(t.flips.size());
    score_sum[0] += t.initial_score;
    int64_t final_score =
        len == 0 ? t.initial_score : t.flips.back().score_after;
    for (uint32_t x = 1; x <= horizon; ++x) {
      if (x <= len) {
        const FlipRecord& r = t.flips[x - 1];
        score_sum[x] += r.score_after;
        poss_sum[x] += r.poss_size;
        delta_sum[x] += r.delta_applied;
        ++active[x];
      } else {
        score_sum[x] += final_score;
      }
    }
  }
  active[0] = cs.total_tries;

  const double nt = static_cast<double>(cs.total_tries);
  const double l = static_cast<double>(cs.num_clauses);
  const double n = static_cast<double>(cs.num_vars);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  cs.mean_score_frac.resize(horizon + 1);
  cs.mean_poss_frac.resize(horizon + 1);
  cs.mean_delta.resize(horizon + 1);
  cs.active_tries = std::move(active);
  for (uint32_t x = 0; x <= horizon; ++x) {
    cs.mean_score_frac[x] =
        l == 0 ? 1.0 : static_cast<double>(score_sum[x]) / (nt * l);
    if (x >= 1 && cs.active_tries[x] > 0) {
      double a = static_cast<double>(cs.active_tries[x]);
      cs.mean_poss_frac[x] = static_cast<double>(poss_sum[x]) / (a * n);
      cs.mean_delta[x] = static_cast<double>(delta_sum[x]) / a;
    } else {
      cs.mean_poss_frac[x] = nan;
      cs.mean_delta[x] = nan;
    }
  }
  return cs;
}

std::vector<PlateauProbe> plateau_flip_check(std::span<const Trace> traces,
                                             double decay_constant,
                                             uint32_t window_lo) {
  check_uniform(traces);
  const Trace& first = traces.front();
  uint32_t horizon = 0;
  for (const Trace& t : traces)
    horizon = std::max(horizon, static_cast<uint32_t>(t.flips.size()));
  CurveSet cs = aggregate_curves(traces, horizon);

  std::vector<PlateauProbe> probes;
  const double n = first.num_vars;
  const double l = first.num_clauses;
  for (uint32_t x = std::max(window_lo, 1u); x <= horizon; ++x) {
    if (cs.active_tries[x] == 0) continue;
    int64_t plus_one = 0;
    for (const Trace& t : traces)
      if (x <= t.flips.size() && t.flips[x - 1].delta_applied == 1)
        ++plus_one;
    PlateauProbe p;
    p.x = x;
    p.active_tries = cs.active_tries[x];
    p.observed = static_cast<double>(plus_one) /
                 static_cast<double>(cs.active_tries[x]);
    p.predicted =
        (l - cs.mean_score_frac[x] * l) / (decay_constant * n);
    probes.push_back(p);
  }
  return probes;
}

std::vector<SuccessCost> success_cost_summary(std::span<const Trace> traces) {
  if (traces.empty())
    throw std::invalid_argument("analysis requires at least one trace");
  std::map<uint32_t, SuccessCost> by_n;
  std::map<uint32_t, std::pair<int64_t, int64_t>> flips_acc;  // solved, all
  for (const Trace& t : traces) {
    SuccessCost& sc = by_n[t.num_vars];
    sc.num_vars = t.num_vars;
    ++sc.tries;
    auto& [solved_flips, all_flips] = flips_acc[t.num_vars];
    all_flips += static_cast<int64_t>(t.flips.size());
    if (t.solved_at >= 0) {
      ++sc.solved;
      solved_flips += t.solved_at;
    }
  }
  std::vector<SuccessCost> out;
  for (auto& [n, sc] : by_n) {
    auto& [solved_flips, all_flips] = flips_acc[n];
    sc.success_rate = static_cast<double>(sc.solved) / sc.tries;
    sc.mean_flips_when_solved =
        sc.solved == 0 ? std::numeric_limits<double>::quiet_NaN()
                       : static_cast<double>(solved_flips) / sc.solved;
    sc.flips_per_solution =
        sc.solved == 0 ? std::numeric_limits<double>::quiet_NaN()
                       : static_cast<double>(all_flips) / sc.solved;
    out.push_back(sc);
  }
  return out;
}

}  // namespace gsat
