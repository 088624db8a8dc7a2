#include "gsatlab/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gsat {

namespace {

struct Points {
  std::vector<double> x, y, w;
  double wsum = 0;
};

struct LinearSolution {
  double offset = 0;
  double amplitude = 0;
  double sse = 0;
};

// Minimizes sum w (y - offset - amplitude u)^2 with u = exp(-x/(decay n)).
LinearSolution solve_linear(const Points& p, double decay, double scale_n,
                            std::optional<double> fixed_offset) {
  const size_t n = p.x.size();
  std::vector<double> u(n);
  for (size_t i = 0; i < n; ++i)
    u[i] = std::exp(-p.x[i] / (decay * scale_n));

  LinearSolution s;
  if (fixed_offset) {
    s.offset = *fixed_offset;
    double suu = 0, suy = 0;
    for (size_t i = 0; i < n; ++i) {
      double r = p.y[i] - s.offset;
      suu += p.w[i] * u[i] * u[i];
      suy += p.w[i] * u[i] * r;
    }
    s.amplitude = suu > 0 ? suy / suu : 0.0;
  } else {
    double sw = p.wsum, su = 0, suu = 0, sy = 0, suy = 0;
    for (size_t i = 0; i < n; ++i) {
      su += p.w[i] * u[i];
      suu += p.w[i] * u[i] * u[i];
      sy += p.w[i] * p.y[i];
      suy += p.w[i] * u[i] * p.y[i];
    }
    double det = sw * suu - su * su;
    if (std::abs(det) < 1e-14 * sw * std::max(suu, 1e-30)) {
      s.offset = sy / sw;  // u nearly constant; fall back to flat model
      s.amplitude = 0;
    } else {
      s.offset = (suu * sy - su * suy) / det;
      s.amplitude = (sw * suy - su * sy) / det;
    }
  }
  double sse = 0;
  for (size_t i = 0; i < n; ++i) {
    double r = p.y[i] - s.offset - s.amplitude * u[i];
    sse += p.w[i] * r * r;
  }
  s.sse = sse;
  return s;
}

}  // namespace

ExpFitResult fit_exponential(std::span<const double> xs,
                             std::span<const double> ys,
                             std::span<const double> weights, double scale_n,
                             double window_lo, double window_hi,
                             const ExpFitOptions& options) {
  if (xs.size() != ys.size() ||
      (!weights.empty() && weights.size() != xs.size()))
    throw std::invalid_argument("fit: input spans disagree in size");
  if (scale_n <= 0) throw std::invalid_argument("fit: scale_n must be > 0");

  Points p;
  for (size_t i = 0; i < xs.size(); ++i) {
    double w = weights.empty() ? 1.0 : weights[i];
    if (xs[i] < window_lo || xs[i] > window_hi) continue;
    if (!std::isfinite(ys[i]) || w <= 0) continue;
    p.x.push_back(xs[i]);
    p.y.push_back(ys[i]);
    p.w.push_back(w);
    p.wsum += w;
  }
  if (p.x.size() < 10)
    throw std::runtime_error("fit: insufficient data, " +
                             std::to_string(p.x.size()) +
                             " usable points in window");

  ExpFitResult out;
  out.window_lo = window_lo;
  out.window_hi = window_hi;
  out.points = static_cast<uint32_t>(p.x.size());

  double ybar;
  if (options.fixed_offset) {
    ybar = *options.fixed_offset;
  } else {
    double sy = 0;
    for (size_t i = 0; i < p.x.size(); ++i) sy += p.w[i] * p.y[i];
    ybar = sy / p.wsum;
  }
  double sst = 0;
  for (size_t i = 0; i < p.x.size(); ++i)
    sst += p.w[i] * (p.y[i] - ybar) * (p.y[i] - ybar);

  double yscale = std::max(1.0, ybar * ybar);
  if (sst <= 1e-14 * p.wsum * yscale) {
    out.degenerate = true;
    out.decay_constant = std::numeric_limits<double>::quiet_NaN();
    out.asymptote = ybar;
    out.amplitude = 0;
    out.sse = sst;
    out.r_squared = 1.0;
    return out;
  }

  auto sse_at = [&](double decay) {
    return solve_linear(p, decay, scale_n, options.fixed_offset).sse;
  };

  const double log_lo = std::log(options.decay_lo);
  const double log_hi = std::log(options.decay_hi);
  const uint32_t grid = std::max(options.grid_points, 3u);
  double best_log = log_lo;
  double best_sse = std::numeric_limits<double>::infinity();
  uint32_t best_i = 0;
  for (uint32_t i = 0; i < grid; ++i) {
    double lg = log_lo + (log_hi - log_lo) * i / (grid - 1);
    double sse = sse_at(std::exp(lg));
    if (sse < best_sse) {
      best_sse = sse;
      best_log = lg;
      best_i = i;
    }
  }

  const double step = (log_hi - log_lo) / (grid - 1);
  double lo = best_i == 0 ? best_log : best_log - step;
  double hi = best_i == grid - 1 ? best_log : best_log + step;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = sse_at(std::exp(c));
  double fd = sse_at(std::exp(d));
  for (int it = 0; it < 120 && (b - a) > 1e-13 * std::max(1.0, std::abs(b));
       ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = sse_at(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = sse_at(std::exp(d));
    }
  }
  double refined_log = fc < fd ? c : d;
  double refined_sse = std::min(fc, fd);
  if (best_sse < refined_sse) {
    refined_log = best_log;
    refined_sse = best_sse;
  }

  double decay = std::exp(refined_log);
  LinearSolution sol = solve_linear(p, decay, scale_n, options.fixed_offset);
  out.decay_constant = decay;
  out.asymptote = sol.offset;
  out.amplitude = sol.amplitude;
  out.sse = sol.sse;
  out.r_squared = 1.0 - sol.sse / sst;
  return out;
}

namespace {

ExpFitResult fit_curve(const CurveSet& curves, std::span<const double> ys,
                       double window_lo, double window_hi, bool negate) {
  std::vector<double> xs(curves.horizon + 1);
  for (uint32_t x = 0; x <= curves.horizon; ++x) xs[x] = x;
  ExpFitResult r = fit_exponential(xs, ys, {}, curves.num_vars, window_lo,
                                   window_hi);
  if (negate) r.amplitude = -r.amplitude;
  return r;
}

}  // namespace

ExpFitResult fit_score_model(const CurveSet& curves, double window_lo,
                             double window_hi) {
  // Work in satisfied clauses per variable so B matches L/N asymptotics.
  double per_var =
      static_cast<double>(curves.num_clauses) / curves.num_vars;
  std::vector<double> ys(curves.horizon + 1);
  for (uint32_t x = 0; x <= curves.horizon; ++x)
    ys[x] = curves.mean_score_frac[x] * per_var;
  // Model is B - C exp(...); the linear stage fits +amplitude, so flip C.
  return fit_curve(curves, ys, window_lo, window_hi, true);
}

ExpFitResult fit_poss_model(const CurveSet& curves, double window_lo,
                            double window_hi) {
  return fit_curve(curves, curves.mean_poss_frac, window_lo, window_hi,
                   false);
}

ExpFitResult fit_region_decay(std::span<const Trace> traces, int32_t j) {
  if (traces.empty())
    throw std::invalid_argument("fit: no traces for region decay");
  if (j < 1) throw std::invalid_argument("fit: region index must be >= 1");
  uint32_t num_vars = traces.front().num_vars;

  // Pooled mean delta at each offset into H_j, over tries whose region
  // covers that offset. The region's first flip is skipped: its delta is
  // exactly j by construction, so the decay starts at offset 1.
  std::vector<int64_t> delta_sum;
  std::vector<int64_t> count;
  for (const Trace& t : traces) {
    if (t.num_vars != num_vars)
      throw std::invalid_argument("fit: traces disagree in num_vars");
    PhaseSegmentation seg = segment_phases(t);
    for (const PhaseRegion& r : seg.regions) {
      if (r.j != j) continue;
      uint32_t len = r.end - r.begin;
      if (len <= 1) continue;
      if (len - 1 > delta_sum.size()) {
        delta_sum.resize(len - 1, 0);
        count.resize(len - 1, 0);
      }
      for (uint32_t p = r.begin + 1; p < r.end; ++p) {
        uint32_t off = p - r.begin;
        delta_sum[off - 1] += t.flips[p].delta_applied;
        ++count[off - 1];
      }
    }
  }

  std::vector<double> xs, ys, ws;
  for (size_t i = 0; i < count.size(); ++i) {
    if (count[i] == 0) continue;
    xs.push_back(static_cast<double>(i + 1));
    ys.push_back(static_cast<double>(delta_sum[i]) /
                 static_cast<double>(count[i]));
    ws.push_back(static_cast<double>(count[i]));
  }
  if (xs.empty()) throw std::runtime_error("fit: region never observed");

  ExpFitOptions opt;
  opt.fixed_offset = static_cast<double>(j);
  return fit_exponential(xs, ys, ws, num_vars, xs.front(), xs.back(), opt);
}

}  // namespace gsat
