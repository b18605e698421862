#pragma once

#include <string>

namespace cliquemine {

// Shortest decimal form that round-trips the exact double. Deterministic and
// locale-free; used wherever output must be byte-stable.
std::string format_double(double v);

// Fixed 17-significant-digit form for feature exports.
std::string format_double_17g(double v);

}  // namespace cliquemine
