#include "gsatlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "gsatlab/analysis.hpp"
#include "gsatlab/baseline.hpp"
#include "gsatlab/fit.hpp"

namespace gsat {

namespace fs = std::filesystem;
namespace bl = gsat::baseline;

namespace {

std::string fnum(double v, int precision = 9) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

double store_ratio(const CampaignConfig& c) {
  return static_cast<double>(resolved_num_clauses(c)) / c.num_vars;
}

std::string store_label(const StoreView& v) {
  return fs::path(v.name).filename().string().empty()
             ? v.name
             : fs::path(v.name).filename().string();
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string verdict(bool ok) { return ok ? "within" : "OUTSIDE"; }

const StoreView* find_store(std::span<const StoreView> views,
                            std::function<bool(const StoreView&)> pred) {
  for (const StoreView& v : views)
    if (pred(v)) return &v;
  return nullptr;
}

const StoreView& require_store(std::span<const StoreView> views, double ratio,
                               uint32_t num_vars, const std::string& report) {
  const StoreView* v = find_store(views, [&](const StoreView& s) {
    return std::abs(store_ratio(s.config) - ratio) < 0.05 &&
           (num_vars == 0 || s.config.num_vars == num_vars);
  });
  if (v == nullptr) {
    std::string want = "ratio " + fnum(ratio, 3);
    if (num_vars != 0) want += " num_vars " + std::to_string(num_vars);
    throw std::runtime_error(report + ": missing campaign (" + want + ")");
  }
  return *v;
}

struct StoreAnalysis {
  CurveSet curves;
  ExpFitResult score_fit;
  bool has_poss_fit = false;
  ExpFitResult poss_fit;
};

StoreAnalysis analyze_store(const StoreView& v) {
  StoreAnalysis a;
  a.curves = aggregate_curves(v.traces, resolved_horizon(v.config));
  double lo = 0.4 * v.config.num_vars;
  double hi = a.curves.horizon;
  a.score_fit = fit_score_model(a.curves, lo, hi);
  try {
    a.poss_fit = fit_poss_model(a.curves, lo, hi);
    a.has_poss_fit = true;
  } catch (const std::runtime_error&) {
    // all tries solved inside the window; poss has no data there
  }
  return a;
}

using Emitter = std::vector<std::string> (*)(std::span<const StoreView>,
                                             const std::string&,
                                             std::ostream&);

std::vector<std::string> emit_figure1(std::span<const StoreView> views,
                                      const std::string& out_dir,
                                      std::ostream& summary) {
  if (views.empty() || views.front().traces.empty())
    throw std::runtime_error("figure1: missing campaign (any store)");
  const StoreView& v = views.front();
  const Trace& t = v.traces.front();
  std::string body = "x,score,score_frac,delta,poss_size,best_delta\n";
  body += "0," + std::to_string(t.initial_score) + "," +
          fnum(static_cast<double>(t.initial_score) / t.num_clauses) +
          ",nan,nan,nan\n";
  for (const FlipRecord& r : t.flips) {
    body += std::to_string(r.flip_index) + "," +
            std::to_string(r.score_after) + "," +
            fnum(static_cast<double>(r.score_after) / t.num_clauses) + "," +
            std::to_string(r.delta_applied) + "," +
            std::to_string(r.poss_size) + "," +
            std::to_string(r.best_delta) + "\n";
  }
  std::string path = (fs::path(out_dir) / "figure1.csv").string();
  write_text_file(path, body);
  summary << "figure1: single-try trajectory, problem " << t.problem_id
          << " try " << t.try_id << " of " << store_label(v) << ", "
          << t.flips.size() << " flips\n";
  return {path};
}

std::vector<std::string> emit_figure2(std::span<const StoreView> views,
                                      const std::string& out_dir,
                                      std::ostream& summary) {
  if (views.empty())
    throw std::runtime_error("figure2: missing campaign (any store)");
  std::string body =
      "store,x,x_over_n,mean_score_frac,fit_score_frac,mean_poss_frac,"
      "fit_poss_frac\n";
  for (const StoreView& v : views) {
    StoreAnalysis a = analyze_store(v);
    double n = v.config.num_vars;
    double per_var = static_cast<double>(a.curves.num_clauses) / n;
    for (uint32_t x = 0; x <= a.curves.horizon; ++x) {
      double xd = x;
      double u_s = std::exp(-xd / (a.score_fit.decay_constant * n));
      double fit_score =
          (a.score_fit.asymptote - a.score_fit.amplitude * u_s) / per_var;
      double fit_poss = std::numeric_limits<double>::quiet_NaN();
      if (a.has_poss_fit) {
        double u_p = std::exp(-xd / (a.poss_fit.decay_constant * n));
        fit_poss = a.poss_fit.asymptote + a.poss_fit.amplitude * u_p;
      }
      body += store_label(v) + "," + std::to_string(x) + "," + fnum(x / n) +
              "," + fnum(a.curves.mean_score_frac[x]) + "," +
              fnum(fit_score) + "," + fnum(a.curves.mean_poss_frac[x]) + "," +
              fnum(fit_poss) + "\n";
    }
    summary << "figure2: " << store_label(v) << " score fit A="
            << fnum(a.score_fit.decay_constant, 4)
            << " B=" << fnum(a.score_fit.asymptote, 4)
            << " C=" << fnum(a.score_fit.amplitude, 4)
            << " R2=" << fnum(a.score_fit.r_squared, 4) << "\n";
  }
  std::string path = (fs::path(out_dir) / "figure2.csv").string();
  write_text_file(path, body);
  return {path};
}

std::vector<std::string> emit_scaling(std::span<const StoreView> views,
                                      const std::string& out_dir,
                                      std::ostream& summary,
                                      const std::string& name, bool poss) {
  if (views.empty())
    throw std::runtime_error(name + ": missing campaign (any store)");
  std::string body = poss
                         ? "store,num_vars,x,x_over_n,mean_poss_frac,"
                           "active_tries\n"
                         : "store,num_vars,x,x_over_n,mean_score_frac\n";
  for (const StoreView& v : views) {
    CurveSet cs = aggregate_curves(v.traces, resolved_horizon(v.config));
    double n = v.config.num_vars;
    for (uint32_t x = 0; x <= cs.horizon; ++x) {
      body += store_label(v) + "," + std::to_string(v.config.num_vars) +
              "," + std::to_string(x) + "," + fnum(x / n) + ",";
      if (poss)
        body += fnum(cs.mean_poss_frac[x]) + "," +
                std::to_string(cs.active_tries[x]) + "\n";
      else
        body += fnum(cs.mean_score_frac[x]) + "\n";
    }
    summary << name << ": " << store_label(v) << " num_vars "
            << v.config.num_vars << " tries " << cs.total_tries << "\n";
  }
  std::string path = (fs::path(out_dir) / (name + ".csv")).string();
  write_text_file(path, body);
  return {path};
}

std::vector<std::string> emit_figure3(std::span<const StoreView> views,
                                      const std::string& out_dir,
                                      std::ostream& summary) {
  return emit_scaling(views, out_dir, summary, "figure3", false);
}

std::vector<std::string> emit_figure4(std::span<const StoreView> views,
                                      const std::string& out_dir,
                                      std::ostream& summary) {
  return emit_scaling(views, out_dir, summary, "figure4", true);
}

std::vector<std::string> emit_table1(std::span<const StoreView> views,
                                     const std::string& out_dir,
                                     std::ostream& summary) {
  if (views.empty())
    throw std::runtime_error("table1: missing campaign (any store)");
  std::string body =
      "store,ratio,num_vars,tries,A,B,C,r_squared,satisfied_frac,"
      "ref_A,ref_B,ref_C,ref_r_squared,ref_satisfied_frac,"
      "verdict_A,verdict_B,verdict_r_squared,verdict_satisfied_frac\n";
  for (const StoreView& v : views) {
    StoreAnalysis a = analyze_store(v);
    double ratio = store_ratio(v.config);
    double sat_frac = a.score_fit.asymptote / ratio;
    auto ref = bl::score_fit_ref(ratio);
    body += store_label(v) + "," + fnum(ratio, 4) + "," +
            std::to_string(v.config.num_vars) + "," +
            std::to_string(a.curves.total_tries) + "," +
            fnum(a.score_fit.decay_constant) + "," +
            fnum(a.score_fit.asymptote) + "," +
            fnum(a.score_fit.amplitude) + "," +
            fnum(a.score_fit.r_squared) + "," + fnum(sat_frac) + ",";
    if (ref) {
      bool ok_a = bl::within_rel(a.score_fit.decay_constant, ref->decay,
                                 bl::kScoreATol);
      bool ok_b = bl::within_rel(a.score_fit.asymptote, ref->asymptote,
                                 bl::kScoreBTol);
      bool ok_r2 = a.score_fit.r_squared >= bl::kFitR2Floor;
      bool ok_f = bl::within_abs(sat_frac, ref->satisfied_frac,
                                 bl::kSatisfiedFracTol);
      body += fnum(ref->decay) + "," + fnum(ref->asymptote) + "," +
              fnum(ref->amplitude) + "," + fnum(ref->r_squared) + "," +
              fnum(ref->satisfied_frac) + "," + verdict(ok_a) + "," +
              verdict(ok_b) + "," + verdict(ok_r2) + "," + verdict(ok_f) +
              "\n";
      summary << "table1: " << store_label(v) << " B="
              << fnum(a.score_fit.asymptote, 4) << " (ref "
              << fnum(ref->asymptote, 4) << ", " << verdict(ok_b) << ") R2="
              << fnum(a.score_fit.r_squared, 4) << " (" << verdict(ok_r2)
              << ")\n";
    } else {
      body += "nan,nan,nan,nan,nan,-,-,-,-\n";
      summary << "table1: " << store_label(v) << " ratio " << fnum(ratio, 4)
              << " has no reference row\n";
    }
  }
  std::string path = (fs::path(out_dir) / "table1.csv").string();
  write_text_file(path, body);
  return {path};
}

std::vector<std::string> emit_table2(std::span<const StoreView> views,
                                     const std::string& out_dir,
                                     std::ostream& summary) {
  if (views.empty())
    throw std::runtime_error("table2: missing campaign (any store)");
  std::string body =
      "store,ratio,num_vars,tries,D,E,F,r_squared,"
      "ref_D,ref_E,ref_F,ref_r_squared,verdict_E,verdict_r_squared\n";
  for (const StoreView& v : views) {
    StoreAnalysis a = analyze_store(v);
    double ratio = store_ratio(v.config);
    body += store_label(v) + "," + fnum(ratio, 4) + "," +
            std::to_string(v.config.num_vars) + "," +
            std::to_string(a.curves.total_tries) + ",";
    if (!a.has_poss_fit) {
      body += "nan,nan,nan,nan,nan,nan,nan,nan,-,-\n";
      summary << "table2: " << store_label(v)
              << " has no poss data in the fit window\n";
      continue;
    }
    auto ref = bl::poss_fit_ref(ratio);
    body += fnum(a.poss_fit.decay_constant) + "," +
            fnum(a.poss_fit.asymptote) + "," + fnum(a.poss_fit.amplitude) +
            "," + fnum(a.poss_fit.r_squared) + ",";
    if (ref) {
      bool ok_e = bl::within_abs(a.poss_fit.asymptote, ref->asymptote,
                                 ref->e_tolerance);
      bool ok_r2 = a.poss_fit.r_squared >= bl::kFitR2Floor;
      body += fnum(ref->decay) + "," + fnum(ref->asymptote) + "," +
              fnum(ref->amplitude) + "," + fnum(ref->r_squared) + "," +
              verdict(ok_e) + "," + verdict(ok_r2) + "\n";
      summary << "table2: " << store_label(v) << " E="
              << fnum(a.poss_fit.asymptote, 4) << " (ref "
              << fnum(ref->asymptote, 4) << ", " << verdict(ok_e) << ") R2="
              << fnum(a.poss_fit.r_squared, 4) << " (" << verdict(ok_r2)
              << ")\n";
    } else {
      body += "nan,nan,nan,nan,-,-\n";
      summary << "table2: " << store_label(v) << " ratio " << fnum(ratio, 4)
              << " has no reference row\n";
    }
  }
  std::string path = (fs::path(out_dir) / "table2.csv").string();
  write_text_file(path, body);
  return {path};
}

std::vector<std::string> emit_table3(std::span<const StoreView> views,
                                     const std::string& out_dir,
                                     std::ostream& summary) {
  const StoreView& v = require_store(views, 4.3, 500, "table3");
  PhaseSummary ps = phase_summary(v.traces);
  std::string body =
      "row,try_count,mean_ratio,sd_ratio,mean_length,sd_length,"
      "ref_mean_ratio,ref_mean_length,verdict_ratio,verdict_length\n";
  bool climb_ok = bl::within_range(ps.mean_climb_length, bl::kClimbLo,
                                   bl::kClimbHi);
  body += "climb," + std::to_string(ps.try_count) + ",nan,nan," +
          fnum(ps.mean_climb_length) + "," + fnum(ps.sd_climb_length) +
          ",nan," + fnum(bl::kClimbMeanLength) + ",-," + verdict(climb_ok) +
          "\n";
  summary << "table3: climb length " << fnum(ps.mean_climb_length, 4)
          << " (ref " << fnum(bl::kClimbMeanLength, 4) << ", "
          << verdict(climb_ok) << ")\n";
  for (const auto& ref : bl::kPhases) {
    const PhaseStats* st = nullptr;
    for (const auto& p : ps.phases)
      if (p.j == ref.j) st = &p;
    if (st == nullptr) {
      body += "h" + std::to_string(ref.j) + ",0,nan,nan,nan,nan," +
              fnum(ref.mean_ratio) + "," + fnum(ref.mean_length) +
              ",OUTSIDE,OUTSIDE\n";
      continue;
    }
    bool ok_ratio =
        bl::within_abs(st->mean_ratio, ref.mean_ratio, bl::kPhaseRatioTol);
    bool ok_len = bl::within_rel(st->mean_length, ref.mean_length,
                                 bl::kPhaseLengthTol);
    body += "h" + std::to_string(ref.j) + "," +
            std::to_string(st->try_count) + "," + fnum(st->mean_ratio) +
            "," + fnum(st->sd_ratio) + "," + fnum(st->mean_length) + "," +
            fnum(st->sd_length) + "," + fnum(ref.mean_ratio) + "," +
            fnum(ref.mean_length) + "," + verdict(ok_ratio) + "," +
            verdict(ok_len) + "\n";
    summary << "table3: H" << ref.j << " ratio " << fnum(st->mean_ratio, 4)
            << " (ref " << fnum(ref.mean_ratio, 4) << ", "
            << verdict(ok_ratio) << "), length " << fnum(st->mean_length, 4)
            << " (ref " << fnum(ref.mean_length, 4) << ", " << verdict(ok_len)
            << ")\n";
  }
  std::string path = (fs::path(out_dir) / "table3.csv").string();
  write_text_file(path, body);
  return {path};
}

std::vector<std::string> emit_gradient(std::span<const StoreView> views,
                                       const std::string& out_dir,
                                       std::ostream& summary) {
  if (views.empty())
    throw std::runtime_error("gradient: missing campaign (any store)");
  std::string body =
      "store,num_vars,try_count,mean_gradient,sd_gradient,ref_mean,"
      "interval_lo,interval_hi,verdict\n";
  for (const StoreView& v : views) {
    PhaseSummary ps = phase_summary(v.traces);
    auto ref = bl::gradient_ref(v.config.num_vars);
    body += store_label(v) + "," + std::to_string(v.config.num_vars) + "," +
            std::to_string(ps.gradient_try_count) + "," +
            fnum(ps.mean_gradient) + "," + fnum(ps.sd_gradient) + ",";
    if (ref) {
      bool ok = bl::within_range(ps.mean_gradient, ref->lo, ref->hi);
      body += fnum(ref->mean) + "," + fnum(ref->lo) + "," + fnum(ref->hi) +
              "," + verdict(ok) + "\n";
      summary << "gradient: " << store_label(v) << " mean "
              << fnum(ps.mean_gradient, 4) << " (ref " << fnum(ref->mean, 4)
              << ", " << verdict(ok) << ")\n";
    } else {
      body += "nan,nan,nan,-\n";
      summary << "gradient: " << store_label(v) << " num_vars "
              << v.config.num_vars << " has no reference row; mean "
              << fnum(ps.mean_gradient, 4) << "\n";
    }
  }
  std::string path = (fs::path(out_dir) / "gradient.csv").string();
  write_text_file(path, body);
  return {path};
}

std::vector<std::string> emit_histogram(std::span<const StoreView> views,
                                        const std::string& out_dir,
                                        std::ostream& summary) {
  const StoreView& v = require_store(views, 4.3, 0, "histogram");
  auto hists = flip_size_histograms(v.traces);
  std::string body = "j,delta,count,fraction\n";
  for (const auto& h : hists)
    for (const auto& [delta, count] : h.counts)
      body += std::to_string(h.j) + "," + std::to_string(delta) + "," +
              std::to_string(count) + "," +
              fnum(static_cast<double>(count) / h.total_flips) + "\n";

  auto fraction = [&](int32_t j, int32_t delta) -> double {
    for (const auto& h : hists)
      if (h.j == j) {
        auto it = h.counts.find(delta);
        return it == h.counts.end()
                   ? 0.0
                   : static_cast<double>(it->second) / h.total_flips;
      }
    return 0.0;
  };
  auto pooled_jplus2 = [&]() -> double {
    int64_t hit = 0, total = 0;
    for (const auto& h : hists) {
      if (h.j != 1 && h.j != 2) continue;
      total += h.total_flips;
      auto it = h.counts.find(h.j + 2);
      if (it != h.counts.end()) hit += it->second;
    }
    return total == 0 ? 0.0 : static_cast<double>(hit) / total;
  };

  double f21 = fraction(1, 2);
  double f32 = fraction(2, 3);
  double fj2 = pooled_jplus2();
  bool ok21 = bl::within_range(f21, bl::kSize2InH1Lo, bl::kSize2InH1Hi);
  bool ok32 = bl::within_range(f32, bl::kSize3InH2Lo, bl::kSize3InH2Hi);
  bool okj2 = fj2 < bl::kSizeJPlus2Cap;
  summary << "histogram: size-2 flips in H1 " << fnum(f21, 4) << " (ref "
          << fnum(bl::kSize2InH1, 4) << ", " << verdict(ok21) << ")\n";
  summary << "histogram: size-3 flips in H2 " << fnum(f32, 4) << " (ref "
          << fnum(bl::kSize3InH2, 4) << ", " << verdict(ok32) << ")\n";
  summary << "histogram: size-(j+2) flips in H1+H2 " << fnum(fj2, 6)
          << " (cap " << fnum(bl::kSizeJPlus2Cap, 4) << ", " << verdict(okj2)
          << ")\n";
  std::string path = (fs::path(out_dir) / "histogram.csv").string();
  write_text_file(path, body);
  return {path};
}

std::vector<std::string> emit_sec6(std::span<const StoreView> views,
                                   const std::string& out_dir,
                                   std::ostream& summary) {
  if (views.empty())
    throw std::runtime_error("sec6: missing campaign (any store)");
  std::string cost_body =
      "store,num_vars,tries,solved,success_rate,mean_flips_when_solved,"
      "flips_per_solution\n";
  std::string plateau_body =
      "store,num_vars,ratio,plateau_poss_frac,mean_observed_plus1,"
      "mean_predicted_plus1,probes\n";
  for (const StoreView& v : views) {
    for (const SuccessCost& sc : success_cost_summary(v.traces)) {
      cost_body += store_label(v) + "," + std::to_string(sc.num_vars) + "," +
                   std::to_string(sc.tries) + "," +
                   std::to_string(sc.solved) + "," + fnum(sc.success_rate) +
                   "," + fnum(sc.mean_flips_when_solved) + "," +
                   fnum(sc.flips_per_solution) + "\n";
      summary << "sec6: " << store_label(v) << " num_vars " << sc.num_vars
              << " success rate " << fnum(sc.success_rate, 4)
              << ", flips per solution " << fnum(sc.flips_per_solution, 5)
              << "\n";
    }
    StoreAnalysis a = analyze_store(v);
    uint32_t lo = static_cast<uint32_t>(0.4 * v.config.num_vars);
    double poss_sum = 0;
    uint32_t poss_n = 0;
    for (uint32_t x = lo; x <= a.curves.horizon; ++x)
      if (a.curves.active_tries[x] > 0 &&
          std::isfinite(a.curves.mean_poss_frac[x])) {
        poss_sum += a.curves.mean_poss_frac[x];
        ++poss_n;
      }
    double plateau_poss = poss_n == 0 ? std::nan("") : poss_sum / poss_n;
    auto probes =
        plateau_flip_check(v.traces, a.score_fit.decay_constant, lo);
    double obs = 0, pred = 0;
    for (const auto& p : probes) {
      obs += p.observed;
      pred += p.predicted;
    }
    if (!probes.empty()) {
      obs /= probes.size();
      pred /= probes.size();
    }
    plateau_body += store_label(v) + "," +
                    std::to_string(v.config.num_vars) + "," +
                    fnum(store_ratio(v.config), 4) + "," +
                    fnum(plateau_poss) + "," + fnum(obs) + "," + fnum(pred) +
                    "," + std::to_string(probes.size()) + "\n";
    summary << "sec6: " << store_label(v) << " plateau poss frac "
            << fnum(plateau_poss, 4) << ", +1-flip observed " << fnum(obs, 4)
            << " vs predicted " << fnum(pred, 4) << "\n";
  }
  std::string cost_path = (fs::path(out_dir) / "sec6_cost.csv").string();
  std::string plateau_path =
      (fs::path(out_dir) / "sec6_plateau.csv").string();
  write_text_file(cost_path, cost_body);
  write_text_file(plateau_path, plateau_body);
  return {cost_path, plateau_path};
}

}  // namespace

StoreView load_store_view(const std::string& store_dir) {
  StoreView v;
  v.name = store_dir;
  v.config = load_manifest(store_dir).config;
  v.traces = load_store(store_dir);
  return v;
}

std::vector<std::string> write_analysis_outputs(
    const std::string& store_dir) {
  StoreView v = load_store_view(store_dir);
  fs::path reports = fs::path(store_dir) / "reports";
  fs::create_directories(reports);

  CurveSet cs = aggregate_curves(v.traces, resolved_horizon(v.config));
  double n = v.config.num_vars;
  std::string curves_body =
      "x,x_over_N,mean_score_frac,mean_poss_frac,mean_delta,active_tries\n";
  for (uint32_t x = 0; x <= cs.horizon; ++x)
    curves_body += std::to_string(x) + "," + fnum(x / n) + "," +
                   fnum(cs.mean_score_frac[x]) + "," +
                   fnum(cs.mean_poss_frac[x]) + "," +
                   fnum(cs.mean_delta[x]) + "," +
                   std::to_string(cs.active_tries[x]) + "\n";

  PhaseSummary ps = phase_summary(v.traces);
  std::string phases_body = "j,mean_ratio,sd_ratio,mean_length,sd_length\n";
  for (const PhaseStats& st : ps.phases)
    phases_body += std::to_string(st.j) + "," + fnum(st.mean_ratio) + "," +
                   fnum(st.sd_ratio) + "," + fnum(st.mean_length) + "," +
                   fnum(st.sd_length) + "\n";

  std::string fits_body =
      "model,A_or_D,B_or_E,C_or_F,r_squared,window_lo,window_hi\n";
  auto fit_row = [&](const std::string& name, const ExpFitResult& r) {
    fits_body += name + "," + fnum(r.decay_constant) + "," +
                 fnum(r.asymptote) + "," + fnum(r.amplitude) + "," +
                 fnum(r.r_squared) + "," + fnum(r.window_lo) + "," +
                 fnum(r.window_hi) + "\n";
  };
  double lo = 0.4 * n;
  fit_row("score", fit_score_model(cs, lo, cs.horizon));
  try {
    fit_row("poss", fit_poss_model(cs, lo, cs.horizon));
  } catch (const std::runtime_error&) {
  }
  for (int32_t j : {1, 2}) {
    try {
      fit_row("region_h" + std::to_string(j), fit_region_decay(v.traces, j));
    } catch (const std::runtime_error&) {
    }
  }

  std::string curves_path = (reports / "curves.csv").string();
  std::string phases_path = (reports / "phases.csv").string();
  std::string fits_path = (reports / "fits.csv").string();
  write_text_file(curves_path, curves_body);
  write_text_file(phases_path, phases_body);
  write_text_file(fits_path, fits_body);
  return {curves_path, phases_path, fits_path};
}

const std::vector<std::string>& report_names() {
  static const std::vector<std::string> names = {
      "figure1", "figure2", "figure3",  "figure4",   "table1",
      "table2",  "table3",  "gradient", "histogram", "sec6"};
  return names;
}

std::vector<std::string> write_report(const std::string& name,
                                      std::span<const StoreView> views,
                                      const std::string& out_dir,
                                      std::ostream& summary) {
  static const std::map<std::string, Emitter> emitters = {
      {"figure1", emit_figure1},   {"figure2", emit_figure2},
      {"figure3", emit_figure3},   {"figure4", emit_figure4},
      {"table1", emit_table1},     {"table2", emit_table2},
      {"table3", emit_table3},     {"gradient", emit_gradient},
      {"histogram", emit_histogram}, {"sec6", emit_sec6}};
  auto it = emitters.find(name);
  if (it == emitters.end())
    throw std::runtime_error("unknown report: " + name);
  fs::create_directories(out_dir);
  return it->second(views, out_dir, summary);
}

}  // namespace gsat
