#include "egf/detail/sci_format.hpp"

namespace egf::detail {

std::string format_scientific(const std::string& mantissa_digits, long exponent) {
  std::string out;
  out += mantissa_digits[0];
  if (mantissa_digits.size() > 1) {
    out += '.';
    out.append(mantissa_digits, 1, std::string::npos);
  }
  out += 'e';
  out += exponent < 0 ? '-' : '+';
  out += std::to_string(exponent < 0 ? -exponent : exponent);
  return out;
}

}  // namespace egf::detail
