#include "gsatlab/dimacs.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace gsat {

std::string emit_dimacs(const Formula& f) {
  std::string out;
  out.reserve(16 + f.num_clauses() * (f.width() + 1) * 5);
  char buf[64];
  std::snprintf(buf, sizeof buf, "p cnf %u %u\n", f.num_vars(),
                f.num_clauses());
  out += buf;
  for (uint32_t c = 0; c < f.num_clauses(); ++c) {
    for (int32_t lit : f.clause(c)) {
      std::snprintf(buf, sizeof buf, "%d ", lit);
      out += buf;
    }
    out += "0\n";
  }
  return out;
}

namespace {

class TokenStream {
 public:
  explicit TokenStream(std::string_view text) : text_(text) {}

  // Returns false at end of input; skips comment lines.
  bool next(std::string& tok) {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ >= text_.size()) return false;
      if (text_[pos_] == 'c' && at_line_start_token()) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    size_t start = pos_;
    while (pos_ < text_.size() &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    tok.assign(text_.substr(start, pos_ - start));
    return true;
  }

 private:
  bool at_line_start_token() const {
    size_t i = pos_;
    while (i > 0 && text_[i - 1] != '\n') {
      if (!std::isspace(static_cast<unsigned char>(text_[i - 1])))
        return false;
      --i;
    }
    return true;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

long parse_long(const std::string& tok) {
  size_t used = 0;
  long value;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("dimacs: expected integer, got '" + tok + "'");
  }
  if (used != tok.size())
    throw std::runtime_error("dimacs: expected integer, got '" + tok + "'");
  return value;
}

}  // namespace

Formula parse_dimacs(std::string_view text,
                     std::optional<uint32_t> strict_width) {
  TokenStream ts(text);
  std::string tok;
  if (!ts.next(tok) || tok != "p")
    throw std::runtime_error("dimacs: missing 'p cnf' header");
  if (!ts.next(tok) || tok != "cnf")
    throw std::runtime_error("dimacs: missing 'p cnf' header");
  if (!ts.next(tok)) throw std::runtime_error("dimacs: truncated header");
  long num_vars = parse_long(tok);
  if (!ts.next(tok)) throw std::runtime_error("dimacs: truncated header");
  long num_clauses = parse_long(tok);
  if (num_vars < 0 || num_clauses < 0)
    throw std::runtime_error("dimacs: negative header counts");

  std::vector<std::vector<int32_t>> clauses;
  clauses.reserve(static_cast<size_t>(num_clauses));
  std::vector<int32_t> current;
  while (ts.next(tok)) {
    long lit = parse_long(tok);
    if (lit == 0) {
      if (current.empty()) throw std::runtime_error("dimacs: empty clause");
      if (strict_width && current.size() != *strict_width)
        throw std::runtime_error("dimacs: clause width " +
                                 std::to_string(current.size()) +
                                 " violates required width " +
                                 std::to_string(*strict_width));
      clauses.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (lit > num_vars || lit < -num_vars)
      throw std::runtime_error("dimacs: literal " + std::to_string(lit) +
                               " out of range for " +
                               std::to_string(num_vars) + " variables");
    current.push_back(static_cast<int32_t>(lit));
  }
  if (!current.empty())
    throw std::runtime_error("dimacs: clause missing terminating 0");
  if (clauses.size() != static_cast<size_t>(num_clauses))
    throw std::runtime_error(
        "dimacs: header declares " + std::to_string(num_clauses) +
        " clauses, found " + std::to_string(clauses.size()));

  try {
    return Formula(static_cast<uint32_t>(num_vars), clauses);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("dimacs: ") + e.what());
  }
}

}  // namespace gsat
