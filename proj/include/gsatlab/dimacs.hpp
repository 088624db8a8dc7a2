// DIMACS CNF serialization.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gsatlab/formula.hpp"

namespace gsat {

// Header line, then one clause per line, literals space-separated with a
// trailing " 0".
std::string emit_dimacs(const Formula& f);

// Accepts comment lines ("c ...") and arbitrary whitespace between tokens.
// Throws std::runtime_error on malformed input, literals out of range,
// repeated variables in a clause, or a clause count that contradicts the
// header. With strict_width set, any clause of a different width is an error.
Formula parse_dimacs(std::string_view text,
                     std::optional<uint32_t> strict_width = std::nullopt);

}  // namespace gsat
