#include "gsatlab/trace_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gsat {

namespace {
constexpr std::string_view kHeader =
    "try_id flip_index variable delta score_after poss_size best_delta";
}

std::string emit_traces(std::span<const Trace> traces) {
  std::string out;
  size_t rows = 0;
  for (const Trace& t : traces) rows += t.flips.size() + 1;
  out.reserve(rows * 40 + 80);
  out += kHeader;
  out += '\n';
  char buf[192];
  for (const Trace& t : traces) {
    std::snprintf(buf, sizeof buf,
                  "try %u problem %u n %u l %u k %u seed %" PRIu64
                  " initial_score %" PRId64 " solved_at %d\n",
                  t.try_id, t.problem_id, t.num_vars, t.num_clauses, t.width,
                  t.seed, t.initial_score, t.solved_at);
    out += buf;
    for (const FlipRecord& r : t.flips) {
      std::snprintf(buf, sizeof buf, "%u %u %u %d %" PRId64 " %u %d\n",
                    t.try_id, r.flip_index, r.variable, r.delta_applied,
                    r.score_after, r.poss_size, r.best_delta);
      out += buf;
    }
  }
  return out;
}

namespace {

[[noreturn]] void fail(size_t line_no, const std::string& what) {
  throw std::runtime_error("trace line " + std::to_string(line_no) + ": " +
                           what);
}

long long to_ll(const std::string& tok, size_t line_no) {
  size_t used = 0;
  long long v;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected integer, got '" + tok + "'");
  }
  if (used != tok.size())
    fail(line_no, "expected integer, got '" + tok + "'");
  return v;
}

unsigned long long to_ull(const std::string& tok, size_t line_no) {
  size_t used = 0;
  unsigned long long v;
  try {
    v = std::stoull(tok, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected unsigned integer, got '" + tok + "'");
  }
  if (used != tok.size())
    fail(line_no, "expected unsigned integer, got '" + tok + "'");
  return v;
}

}  // namespace

std::vector<Trace> parse_traces(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;

  if (!std::getline(in, line) || line != kHeader)
    throw std::runtime_error("trace line 1: missing or malformed header");
  ++line_no;

  std::vector<Trace> traces;
  Trace* current = nullptr;
  std::vector<std::string> tok;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    tok.clear();
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "try") {
      if (tok.size() != 16 || tok[2] != "problem" || tok[4] != "n" ||
          tok[6] != "l" || tok[8] != "k" || tok[10] != "seed" ||
          tok[12] != "initial_score" || tok[14] != "solved_at")
        fail(line_no, "malformed try metadata row");
      Trace tr;
      tr.try_id = static_cast<uint32_t>(to_ull(tok[1], line_no));
      tr.problem_id = static_cast<uint32_t>(to_ull(tok[3], line_no));
      tr.num_vars = static_cast<uint32_t>(to_ull(tok[5], line_no));
      tr.num_clauses = static_cast<uint32_t>(to_ull(tok[7], line_no));
      tr.width = static_cast<uint32_t>(to_ull(tok[9], line_no));
      tr.seed = to_ull(tok[11], line_no);
      tr.initial_score = to_ll(tok[13], line_no);
      tr.solved_at = static_cast<int32_t>(to_ll(tok[15], line_no));
      traces.push_back(std::move(tr));
      current = &traces.back();
      continue;
    }

    if (current == nullptr) fail(line_no, "flip row before any try row");
    if (tok.size() != 7) fail(line_no, "flip row needs 7 columns");
    FlipRecord r;
    uint32_t row_try = static_cast<uint32_t>(to_ull(tok[0], line_no));
    if (row_try != current->try_id)
      fail(line_no, "try_id does not match preceding try row");
    r.flip_index = static_cast<uint32_t>(to_ull(tok[1], line_no));
    if (r.flip_index != current->flips.size() + 1)
      fail(line_no, "flip_index out of sequence");
    r.variable = static_cast<Var>(to_ull(tok[2], line_no));
    if (r.variable == 0 || r.variable > current->num_vars)
      fail(line_no, "variable out of range");
    r.delta_applied = static_cast<int32_t>(to_ll(tok[3], line_no));
    r.score_after = to_ll(tok[4], line_no);
    r.poss_size = static_cast<uint32_t>(to_ull(tok[5], line_no));
    if (r.poss_size == 0 || r.poss_size > current->num_vars)
      fail(line_no, "poss_size out of range");
    r.best_delta = static_cast<int32_t>(to_ll(tok[6], line_no));
    current->flips.push_back(r);
  }

  for (const Trace& tr : traces) {
    if (tr.solved_at > 0 &&
        static_cast<size_t>(tr.solved_at) != tr.flips.size())
      throw std::runtime_error("trace: solved_at does not match flip count");
    if (tr.solved_at == 0 && !tr.flips.empty())
      throw std::runtime_error("trace: flips recorded after initial solve");
  }
  return traces;
}

void write_trace_file(const std::string& path, std::span<const Trace> traces) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  std::string body = emit_traces(traces);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<Trace> read_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_traces(ss.str());
}

}  // namespace gsat
