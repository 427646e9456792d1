#pragma once

#include <string>

namespace pascal {

/// Shortest decimal string that round-trips to the same binary64 value;
/// locale independent ('.' separator). Non-finite values print as
/// "nan", "inf", "-inf".
std::string format_double(double value);

}  // namespace pascal
