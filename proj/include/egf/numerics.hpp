#pragma once

#include <gmpxx.h>

#include <string>

#include "egf/precision.hpp"
#include "egf/real.hpp"

namespace egf {

// A positive quantity held as its natural logarithm. Terms of this problem
// reach 10^243530, far outside any fixed-range float, so estimate pipelines
// stay in the log domain end to end; only rendering ever exponentiates, and
// then only a fractional part.
struct LnValue {
  Real ln;

  static LnValue from_ln(Real l) { return LnValue{std::move(l)}; }

  // Logarithm of an exact positive integer, rounded to ctx.bits.
  static LnValue of_integer(const mpz_class& x, const PrecisionContext& ctx);

  // Multiplication of quantities is addition of logarithms.
  friend LnValue operator*(const LnValue& a, const LnValue& b) {
    return LnValue{a.ln + b.ln};
  }

  // Raising to a real power scales the logarithm.
  LnValue pow(const Real& exponent) const { return LnValue{ln * exponent}; }
};

// ln(n!) from the exact big integer n!, rounded to ctx.bits. Exact
// factorials keep Stirling truncation out of everything except the one
// closed-form estimate that is defined in terms of Stirling.
Real ln_factorial(unsigned long n, const PrecisionContext& ctx);

// Renders the quantity exp(v.ln) as "m.ddd...e+E" with `digits` significant
// digits, round half to even. Writing L = ln/ln(10), the exponent is
// E = floor(L) and the mantissa is 10^(L-E).
//
// The printed digits are audited: the string is recomputed with 64 extra
// bits and must match; on mismatch the rendering precision doubles, up to a
// cap, after which a PrecisionError is thrown.
std::string render_ln_scientific(const LnValue& v, unsigned digits);

}  // namespace egf
