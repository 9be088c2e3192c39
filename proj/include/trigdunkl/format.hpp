#pragma once

#include <string>

namespace trigdunkl {

/// Shortest decimal string that round-trips to the same double (at most 17
/// significant digits). Non-finite values print as nan, inf, -inf.
std::string format_double(double v);

}  // namespace trigdunkl
