#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gsatlab/campaign.hpp"
#include "gsatlab/dimacs.hpp"
#include "gsatlab/report.hpp"

namespace fs = std::filesystem;

namespace {

std::string default_out_root() {
  const char* env = std::getenv("GSATLAB_OUT");
  return env != nullptr && *env != '\0' ? env : ".";
}

std::string store_dir_name(const gsat::CampaignConfig& c) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "store_n%u_l%u_k%u_seed%llu",
                c.num_vars, gsat::resolved_num_clauses(c), c.width,
                static_cast<unsigned long long>(c.master_seed));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GSAT local-search laboratory"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit a random k-SAT instance");
  gsat::GeneratorSpec spec;
  spec.num_vars = 500;
  double gen_ratio = 4.3;
  bool have_clauses = false;
  std::string gen_out;
  gen->add_option("--n", spec.num_vars, "variables")->capture_default_str();
  gen->add_option("--clauses", spec.num_clauses, "clauses (overrides --ratio)")
      ->each([&](const std::string&) { have_clauses = true; });
  gen->add_option("--ratio", gen_ratio, "clauses per variable")
      ->capture_default_str();
  gen->add_option("--k", spec.width, "literals per clause")
      ->capture_default_str();
  gen->add_option("--seed", spec.seed, "generator seed")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->callback([&] {
    if (!have_clauses)
      spec.num_clauses = static_cast<uint32_t>(
          std::llround(gen_ratio * spec.num_vars));
    std::string text = gsat::emit_dimacs(gsat::generate_random_ksat(spec));
    if (gen_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(gen_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + gen_out);
      out << text;
    }
  });

  // run
  auto* run = app.add_subcommand("run", "run a campaign into a trace store");
  gsat::CampaignConfig config;
  std::string run_out;
  run->add_option("--n", config.num_vars, "variables")->capture_default_str();
  run->add_option("--ratio", config.ratio, "clauses per variable")
      ->capture_default_str();
  run->add_option("--clauses", config.num_clauses,
                  "clauses (overrides --ratio)");
  run->add_option("--k", config.width, "literals per clause")
      ->capture_default_str();
  run->add_option("--problems", config.problem_count, "problem count")
      ->capture_default_str();
  run->add_option("--tries", config.tries_per_problem, "tries per problem")
      ->capture_default_str();
  run->add_option("--max-flips", config.max_flips,
                  "flips per try (default 2.5 * n)");
  run->add_option("--horizon", config.horizon,
                  "curve length for analysis (default max-flips)");
  run->add_option("--seed", config.master_seed, "campaign master seed")
      ->capture_default_str();
  run->add_option("--workers", config.worker_count,
                  "parallel workers (default all cores)");
  run->add_option("--out", run_out,
                  "store directory (default $GSATLAB_OUT/<derived name>)");
  run->callback([&] {
    config.output_dir =
        run_out.empty()
            ? (fs::path(default_out_root()) / store_dir_name(config)).string()
            : run_out;
    gsat::StoreManifest m = gsat::run_campaign(config);
    std::cout << "store: " << config.output_dir << "\n"
              << "problems: " << m.config.problem_count
              << "  tries/problem: " << m.config.tries_per_problem
              << "  max_flips: " << m.config.max_flips << "\n"
              << "wall_seconds: " << m.wall_seconds << "\n";
  });

  // analyze
  auto* analyze =
      app.add_subcommand("analyze", "write curves/phases/fits CSVs");
  std::string analyze_store;
  analyze->add_option("--store", analyze_store, "store directory")
      ->required();
  analyze->callback([&] {
    for (const std::string& path : gsat::write_analysis_outputs(analyze_store))
      std::cout << path << "\n";
  });

  // report
  auto* report = app.add_subcommand("report", "generate a named report");
  std::string report_name;
  std::vector<std::string> report_stores;
  std::string report_out;
  report->add_option("--name", report_name, "report name")
      ->required()
      ->check(CLI::IsMember(gsat::report_names()));
  report->add_option("--store", report_stores, "store directory (repeatable)")
      ->required();
  report->add_option("--out", report_out,
                     "output directory (default $GSATLAB_OUT/reports)");
  report->callback([&] {
    std::vector<gsat::StoreView> views;
    views.reserve(report_stores.size());
    for (const std::string& dir : report_stores)
      views.push_back(gsat::load_store_view(dir));
    std::string out = report_out.empty()
                          ? (fs::path(default_out_root()) / "reports").string()
                          : report_out;
    for (const std::string& path :
         gsat::write_report(report_name, views, out, std::cout))
      std::cout << path << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
