// Columnar text format for flip traces: a header row naming the seven flip
// columns, one metadata row per try, then one row of integers per flip.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsatlab/engine.hpp"

namespace gsat {

std::string emit_traces(std::span<const Trace> traces);

// Throws std::runtime_error on any structural defect: missing or wrong
// header, malformed rows, flip indices that do not count up from 1, rows
// not matching their preceding metadata row.
std::vector<Trace> parse_traces(std::string_view text);

void write_trace_file(const std::string& path, std::span<const Trace> traces);
std::vector<Trace> read_trace_file(const std::string& path);

}  // namespace gsat
