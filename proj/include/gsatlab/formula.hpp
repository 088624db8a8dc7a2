// CNF formulas in compressed storage, truth assignments, and the
// fixed-width random generator.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gsatlab/rng.hpp"

namespace gsat {

using Var = uint32_t;  // variables are 1-based

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(uint32_t num_vars, bool value = false)
      : values_(num_vars + 1, value ? 1 : 0) {}

  // Each variable true with probability 1/2, drawn in index order.
  static Assignment random(uint32_t num_vars, SplitMix64& rng);

  uint32_t num_vars() const {
    return values_.empty() ? 0 : static_cast<uint32_t>(values_.size() - 1);
  }
  bool value(Var v) const { return values_[v] != 0; }
  void set(Var v, bool val) { values_[v] = val ? 1 : 0; }
  void flip(Var v) { values_[v] ^= 1; }

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<uint8_t> values_;  // slot 0 unused
};

class Formula {
 public:
  Formula() = default;
  // Literals are nonzero signed ints with |lit| in 1..num_vars; variables
  // within one clause must be distinct.
  Formula(uint32_t num_vars, const std::vector<std::vector<int32_t>>& clauses);

  uint32_t num_vars() const { return num_vars_; }
  uint32_t num_clauses() const {
    return clause_offsets_.empty()
               ? 0
               : static_cast<uint32_t>(clause_offsets_.size() - 1);
  }
  // Uniform clause width; 0 when clauses have mixed widths or there are none.
  uint32_t width() const { return width_; }

  std::span<const int32_t> clause(uint32_t c) const {
    return {literals_.data() + clause_offsets_[c],
            literals_.data() + clause_offsets_[c + 1]};
  }
  // Entries packed as (clause_index << 1) | positive_literal.
  std::span<const uint32_t> occurrences(Var v) const {
    return {occ_.data() + occ_offsets_[v], occ_.data() + occ_offsets_[v + 1]};
  }
  uint32_t max_occurrences() const { return max_occ_; }

  bool satisfied(const Assignment& a) const;

  bool operator==(const Formula& o) const {
    return num_vars_ == o.num_vars_ && clause_offsets_ == o.clause_offsets_ &&
           literals_ == o.literals_;
  }

 private:
  uint32_t num_vars_ = 0;
  uint32_t width_ = 0;
  uint32_t max_occ_ = 0;
  std::vector<uint32_t> clause_offsets_;
  std::vector<int32_t> literals_;
  std::vector<uint32_t> occ_offsets_;
  std::vector<uint32_t> occ_;
};

struct GeneratorSpec {
  uint32_t num_vars = 0;
  uint32_t num_clauses = 0;
  uint32_t width = 3;  // num_vars >= width >= 1
  uint64_t seed = 0;
};

// Each clause: `width` distinct variables uniform without replacement, each
// sign a fair coin. Deterministic in spec.seed.
Formula generate_random_ksat(const GeneratorSpec& spec);

// Number of satisfied clauses, by full scan.
int64_t score(const Formula& f, const Assignment& a);

}  // namespace gsat
