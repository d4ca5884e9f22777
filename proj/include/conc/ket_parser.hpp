#pragma once

#include <optional>
#include <string>

#include "conc/qstate.hpp"

namespace conc {

// Parses expressions like
//   1/sqrt(2)*|00> + 1/sqrt(2)*|11>
//   exp(2i*pi/3)/sqrt(6)*(|1010>+|0101>)
// into a normalized PureState. Labels are one digit per character, or
// comma-separated for d_i > 10. When dims is absent each d_i is inferred
// as max(2, largest label + 1).
PureState parse_ket(const std::string& text,
                    std::optional<QuditDims> dims = std::nullopt);

}  // namespace conc
