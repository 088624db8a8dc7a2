#include "gsatlab/formula.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gsat {

Assignment Assignment::random(uint32_t num_vars, SplitMix64& rng) {
  Assignment a(num_vars);
  for (Var v = 1; v <= num_vars; ++v) a.set(v, rng.coin());
  return a;
}

Formula::Formula(uint32_t num_vars,
                 const std::vector<std::vector<int32_t>>& clauses)
    : num_vars_(num_vars) {
  clause_offsets_.reserve(clauses.size() + 1);
  clause_offsets_.push_back(0);
  std::vector<uint32_t> seen(num_vars + 1, 0);
  uint32_t stamp = 0;
  for (const auto& cl : clauses) {
    if (cl.empty()) throw std::invalid_argument("empty clause");
    ++stamp;
    for (int32_t lit : cl) {
      uint32_t v = static_cast<uint32_t>(std::abs(lit));
      if (lit == 0 || v > num_vars_)
        throw std::invalid_argument("literal out of range: " +
                                    std::to_string(lit));
      if (seen[v] == stamp)
        throw std::invalid_argument("repeated variable in clause: " +
                                    std::to_string(v));
      seen[v] = stamp;
      literals_.push_back(lit);
    }
    clause_offsets_.push_back(static_cast<uint32_t>(literals_.size()));
  }

  if (!clauses.empty()) {
    width_ = static_cast<uint32_t>(clauses.front().size());
    for (const auto& cl : clauses)
      if (cl.size() != width_) {
        width_ = 0;
        break;
      }
  }

  std::vector<uint32_t> counts(num_vars_ + 2, 0);
  for (int32_t lit : literals_) ++counts[std::abs(lit)];
  occ_offsets_.assign(num_vars_ + 2, 0);
  for (Var v = 1; v <= num_vars_; ++v) {
    occ_offsets_[v + 1] = occ_offsets_[v] + counts[v];
    if (counts[v] > max_occ_) max_occ_ = counts[v];
  }
  occ_.resize(literals_.size());
  std::vector<uint32_t> cursor(occ_offsets_.begin(), occ_offsets_.end());
  for (uint32_t c = 0; c < num_clauses(); ++c)
    for (int32_t lit : clause(c)) {
      uint32_t v = static_cast<uint32_t>(std::abs(lit));
      occ_[cursor[v]++] = (c << 1) | (lit > 0 ? 1u : 0u);
    }
}

bool Formula::satisfied(const Assignment& a) const {
  return score(*this, a) == num_clauses();
}

Formula generate_random_ksat(const GeneratorSpec& spec) {
  if (spec.width == 0 || spec.width > spec.num_vars)
    throw std::invalid_argument("generator requires num_vars >= width >= 1");
  SplitMix64 rng(spec.seed);
  std::vector<std::vector<int32_t>> clauses(spec.num_clauses);
  std::vector<uint32_t> seen(spec.num_vars + 1, 0);
  uint32_t stamp = 0;
  std::vector<Var> picked(spec.width);
  for (auto& cl : clauses) {
    ++stamp;
    for (uint32_t i = 0; i < spec.width; ++i) {
      Var v;
      do {
        v = static_cast<Var>(rng.bounded(spec.num_vars)) + 1;
      } while (seen[v] == stamp);
      seen[v] = stamp;
      picked[i] = v;
    }
    cl.reserve(spec.width);
    for (uint32_t i = 0; i < spec.width; ++i)
      cl.push_back(rng.coin() ? static_cast<int32_t>(picked[i])
                              : -static_cast<int32_t>(picked[i]));
  }
  return Formula(spec.num_vars, clauses);
}

int64_t score(const Formula& f, const Assignment& a) {
  int64_t sat = 0;
  for (uint32_t c = 0; c < f.num_clauses(); ++c)
    for (int32_t lit : f.clause(c)) {
      if (a.value(static_cast<Var>(std::abs(lit))) == (lit > 0)) {
        ++sat;
        break;
      }
    }
  return sat;
}

}  // namespace gsat
