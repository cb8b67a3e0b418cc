#pragma once

#include <string>

namespace egf::detail {

// Composes "m.ddd...e+E" from a rounded mantissa digit string (first digit
// is the integer part) and a decimal exponent.
std::string format_scientific(const std::string& mantissa_digits, long exponent);

}  // namespace egf::detail
