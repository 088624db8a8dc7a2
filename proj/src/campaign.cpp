#include "gsatlab/campaign.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "gsatlab/trace_io.hpp"

namespace gsat {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

uint32_t resolved_num_clauses(const CampaignConfig& config) {
  if (config.num_clauses != 0) return config.num_clauses;
  if (config.ratio <= 0)
    throw std::invalid_argument("campaign: ratio must be positive");
  return static_cast<uint32_t>(
      std::llround(config.ratio * config.num_vars));
}

uint32_t resolved_max_flips(const CampaignConfig& config) {
  if (config.max_flips != 0) return config.max_flips;
  return static_cast<uint32_t>(std::llround(2.5 * config.num_vars));
}

uint32_t resolved_horizon(const CampaignConfig& config) {
  return config.horizon != 0 ? config.horizon : resolved_max_flips(config);
}

uint64_t problem_gen_seed(uint64_t master_seed, uint32_t problem_id) {
  return derive_stream_seed(master_seed, "gen", problem_id, 0);
}

uint64_t campaign_try_seed(uint64_t master_seed, uint32_t problem_id,
                           uint32_t try_id) {
  return derive_stream_seed(master_seed, "try", problem_id, try_id);
}

Formula campaign_problem(const CampaignConfig& config, uint32_t problem_id) {
  GeneratorSpec spec;
  spec.num_vars = config.num_vars;
  spec.num_clauses = resolved_num_clauses(config);
  spec.width = config.width;
  spec.seed = problem_gen_seed(config.master_seed, problem_id);
  return generate_random_ksat(spec);
}

namespace {

void validate(const CampaignConfig& config) {
  if (config.num_vars == 0)
    throw std::invalid_argument("campaign: num_vars must be >= 1");
  if (config.width == 0 || config.width > config.num_vars)
    throw std::invalid_argument("campaign: need num_vars >= width >= 1");
  if (config.tries_per_problem == 0)
    throw std::invalid_argument("campaign: tries_per_problem must be >= 1");
  if (resolved_max_flips(config) == 0)
    throw std::invalid_argument("campaign: max_flips must be >= 1");
  resolved_num_clauses(config);  // throws before the parallel region can
}

int resolved_workers(const CampaignConfig& config) {
  if (config.worker_count != 0) return static_cast<int>(config.worker_count);
  return omp_get_max_threads();
}

std::string trace_file_name(uint32_t problem_id) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "traces/problem_%05u.trace", problem_id);
  return buf;
}

// Runs the (problem, try) grid for the given problems; traces grouped per
// problem in try order.
std::vector<std::vector<Trace>> run_problems(
    const CampaignConfig& config, const std::vector<uint32_t>& problems) {
  const uint32_t tries = config.tries_per_problem;
  const uint32_t max_flips = resolved_max_flips(config);
  const size_t count = problems.size();

  std::vector<Formula> formulas(count);
  const int workers = resolved_workers(config);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (size_t i = 0; i < count; ++i)
    formulas[i] = campaign_problem(config, problems[i]);

  std::vector<std::vector<Trace>> results(count,
                                          std::vector<Trace>(tries));
#pragma omp parallel for collapse(2) schedule(dynamic) num_threads(workers)
  for (size_t i = 0; i < count; ++i)
    for (uint32_t t = 0; t < tries; ++t) {
      uint32_t pid = problems[i];
      uint64_t seed = campaign_try_seed(config.master_seed, pid, t);
      results[i][t] =
          std::move(run_try(formulas[i], max_flips, seed, pid, t).trace);
    }
  return results;
}

ordered_json config_json(const CampaignConfig& config) {
  ordered_json j;
  j["num_vars"] = config.num_vars;
  j["num_clauses"] = resolved_num_clauses(config);
  j["width"] = config.width;
  j["problem_count"] = config.problem_count;
  j["tries_per_problem"] = config.tries_per_problem;
  j["max_flips"] = resolved_max_flips(config);
  j["horizon"] = resolved_horizon(config);
  j["master_seed"] = config.master_seed;
  return j;
}

CampaignConfig config_from_json(const ordered_json& j) {
  CampaignConfig c;
  c.num_vars = j.at("num_vars").get<uint32_t>();
  c.num_clauses = j.at("num_clauses").get<uint32_t>();
  c.width = j.at("width").get<uint32_t>();
  c.problem_count = j.at("problem_count").get<uint32_t>();
  c.tries_per_problem = j.at("tries_per_problem").get<uint32_t>();
  c.max_flips = j.at("max_flips").get<uint32_t>();
  c.horizon = j.at("horizon").get<uint32_t>();
  c.master_seed = j.at("master_seed").get<uint64_t>();
  return c;
}

ordered_json manifest_json(const CampaignConfig& config, double wall_seconds) {
  ordered_json j;
  j["format"] = "gsatlab-campaign/1";
  j["rng"] = {
      {"algorithm", "splitmix64"},
      {"stream_derivation",
       "mix(mix(mix(master xor fnv1a64(tag)) xor a) xor b); "
       "mix is the splitmix64 finalizer; tags: gen(problem,0), "
       "try(problem,try)"}};
  j["config"] = config_json(config);
  ordered_json problems = ordered_json::array();
  for (uint32_t p = 0; p < config.problem_count; ++p) {
    ordered_json e;
    e["id"] = p;
    e["file"] = trace_file_name(p);
    e["gen_seed"] = problem_gen_seed(config.master_seed, p);
    problems.push_back(e);
  }
  j["problems"] = problems;
  j["timing"] = {{"wall_seconds", wall_seconds}};
  return j;
}

void write_file_atomic(const fs::path& path, const std::string& body) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

void write_manifest(const fs::path& dir, const CampaignConfig& config,
                    double wall_seconds) {
  write_file_atomic(dir / "manifest.json",
                    manifest_json(config, wall_seconds).dump(2) + "\n");
}

}  // namespace

std::vector<Trace> run_campaign_in_memory(const CampaignConfig& config) {
  validate(config);
  std::vector<uint32_t> all(config.problem_count);
  for (uint32_t p = 0; p < config.problem_count; ++p) all[p] = p;
  auto grouped = run_problems(config, all);
  std::vector<Trace> flat;
  flat.reserve(static_cast<size_t>(config.problem_count) *
               config.tries_per_problem);
  for (auto& g : grouped)
    for (auto& t : g) flat.push_back(std::move(t));
  return flat;
}

StoreManifest run_campaign(const CampaignConfig& config) {
  validate(config);
  if (config.output_dir.empty())
    throw std::invalid_argument("campaign: output_dir not set");
  auto start = std::chrono::steady_clock::now();

  fs::path dir(config.output_dir);
  fs::create_directories(dir / "traces");
  fs::create_directories(dir / "reports");

  fs::path manifest_path = dir / "manifest.json";
  if (fs::exists(manifest_path)) {
    StoreManifest existing = load_manifest(config.output_dir);
    if (manifest_json(existing.config, 0)["config"] !=
        manifest_json(config, 0)["config"])
      throw std::runtime_error(
          "campaign: store at " + config.output_dir +
          " was created with a different config; refusing to mix");
  } else {
    write_manifest(dir, config, 0.0);
  }

  std::vector<uint32_t> pending;
  for (uint32_t p = 0; p < config.problem_count; ++p)
    if (!fs::exists(dir / trace_file_name(p))) pending.push_back(p);

  auto grouped = run_problems(config, pending);
  for (size_t i = 0; i < pending.size(); ++i)
    write_file_atomic(dir / trace_file_name(pending[i]),
                      emit_traces(grouped[i]));

  double elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  write_manifest(dir, config, elapsed);
  return load_manifest(config.output_dir);
}

StoreManifest load_manifest(const std::string& store_dir) {
  fs::path path = fs::path(store_dir) / "manifest.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("manifest parse error: " + std::string(e.what()));
  }
  if (j.value("format", "") != "gsatlab-campaign/1")
    throw std::runtime_error("manifest: unknown format");

  StoreManifest m;
  m.config = config_from_json(j.at("config"));
  for (const auto& e : j.at("problems")) {
    m.trace_files.push_back(e.at("file").get<std::string>());
    m.gen_seeds.push_back(e.at("gen_seed").get<uint64_t>());
  }
  if (m.trace_files.size() != m.config.problem_count)
    throw std::runtime_error("manifest: problem list size mismatch");
  m.wall_seconds = j.at("timing").at("wall_seconds").get<double>();
  return m;
}

std::vector<Trace> load_store(const std::string& store_dir) {
  StoreManifest m = load_manifest(store_dir);
  std::vector<Trace> all;
  all.reserve(static_cast<size_t>(m.config.problem_count) *
              m.config.tries_per_problem);
  for (uint32_t p = 0; p < m.config.problem_count; ++p) {
    fs::path path = fs::path(store_dir) / m.trace_files[p];
    std::vector<Trace> traces = read_trace_file(path.string());
    if (traces.size() != m.config.tries_per_problem)
      throw std::runtime_error("store: " + path.string() + " holds " +
                               std::to_string(traces.size()) +
                               " tries, manifest expects " +
                               std::to_string(m.config.tries_per_problem));
    for (uint32_t t = 0; t < traces.size(); ++t) {
      const Trace& tr = traces[t];
      if (tr.problem_id != p || tr.try_id != t ||
          tr.num_vars != m.config.num_vars ||
          tr.num_clauses != m.config.num_clauses ||
          tr.width != m.config.width)
        throw std::runtime_error("store: " + path.string() +
                                 " disagrees with manifest");
    }
    for (auto& t : traces) all.push_back(std::move(t));
  }
  return all;
}

}  // namespace gsat
