// Campaign runner: a grid of (problem, try) work units executed in
// parallel, with results written to a resumable on-disk store. Outputs are
// byte-identical for a given config regardless of worker count.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsatlab/engine.hpp"

namespace gsat {

struct CampaignConfig {
  uint32_t num_vars = 500;
  uint32_t num_clauses = 0;  // 0: derive from ratio
  double ratio = 4.3;        // clauses per variable, used when num_clauses == 0
  uint32_t width = 3;
  uint32_t problem_count = 500;
  uint32_t tries_per_problem = 10;
  uint32_t max_flips = 0;  // 0: 2.5 * num_vars
  uint32_t horizon = 0;    // curve length for analysis; 0: max_flips
  uint64_t master_seed = 1;
  uint32_t worker_count = 0;  // 0: all available
  std::string output_dir;     // unused by the in-memory runner
};

uint32_t resolved_num_clauses(const CampaignConfig& config);
uint32_t resolved_max_flips(const CampaignConfig& config);
uint32_t resolved_horizon(const CampaignConfig& config);

// Seed streams: tags "gen" and "try" under the campaign master seed.
uint64_t problem_gen_seed(uint64_t master_seed, uint32_t problem_id);
uint64_t campaign_try_seed(uint64_t master_seed, uint32_t problem_id,
                           uint32_t try_id);

Formula campaign_problem(const CampaignConfig& config, uint32_t problem_id);

// Runs the full grid and returns traces ordered by (problem_id, try_id).
std::vector<Trace> run_campaign_in_memory(const CampaignConfig& config);

struct StoreManifest {
  CampaignConfig config;  // resolved values, output_dir/worker_count omitted
  std::vector<std::string> trace_files;  // store-relative, by problem id
  std::vector<uint64_t> gen_seeds;
  double wall_seconds = 0;
};

// Creates or resumes the store at config.output_dir: manifest.json plus one
// trace file per problem, each written atomically. Problems whose file
// already exists are skipped; a manifest from a different config is an
// error.
StoreManifest run_campaign(const CampaignConfig& config);

StoreManifest load_manifest(const std::string& store_dir);

// Reads every trace file, validates shape against the manifest, returns
// traces ordered by (problem_id, try_id).
std::vector<Trace> load_store(const std::string& store_dir);

}  // namespace gsat
