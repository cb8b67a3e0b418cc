#pragma once

#include <gmpxx.h>

#include <string>

namespace egf {

// Renders a positive integer as "m.ddd...e+E" with the requested number of
// significant digits, rounding half to even on the exact decimal digits.
// E is the decimal exponent (number of digits of x minus one, plus one more
// when rounding carries past the leading digit).
std::string render_int_scientific(const mpz_class& x, unsigned digits);

}  // namespace egf
