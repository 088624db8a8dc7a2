// CSV emitters for campaign stores: the standard analysis bundle plus the
// named report generators. Table reports place measured values beside the
// baseline reference values with a tolerance verdict per cell.
#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gsatlab/campaign.hpp"

namespace gsat {

struct StoreView {
  std::string name;
  CampaignConfig config;  // resolved
  std::vector<Trace> traces;
};

StoreView load_store_view(const std::string& store_dir);

// Writes curves.csv, phases.csv and fits.csv into <store>/reports/.
// Returns the paths written.
std::vector<std::string> write_analysis_outputs(const std::string& store_dir);

// Report names: figure1 figure2 figure3 figure4 table1 table2 table3
// gradient histogram sec6. Throws std::runtime_error for unknown names or
// when the given stores do not cover the report's inputs, naming what is
// missing. Returns the paths written.
std::vector<std::string> write_report(const std::string& name,
                                      std::span<const StoreView> views,
                                      const std::string& out_dir,
                                      std::ostream& summary);

const std::vector<std::string>& report_names();

}  // namespace gsat
