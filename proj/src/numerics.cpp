#include "egf/numerics.hpp"

#include <mpfr.h>

#include <algorithm>

#include "egf/detail/sci_format.hpp"
#include "egf/errors.hpp"

namespace egf {

LnValue LnValue::of_integer(const mpz_class& x, const PrecisionContext& ctx) {
  if (x <= 0) throw DomainError("log domain requires a positive value");
  Real v(ctx.working());
  mpfr_set_z(v.raw(), x.get_mpz_t(), MPFR_RNDN);
  return LnValue{log(v).rounded_to(ctx.bits)};
}

Real ln_factorial(unsigned long n, const PrecisionContext& ctx) {
  mpz_class fac;
  mpz_fac_ui(fac.get_mpz_t(), n);
  Real v(ctx.working());
  mpfr_set_z(v.raw(), fac.get_mpz_t(), MPFR_RNDN);
  return log(v).rounded_to(ctx.bits);
}

namespace {

// One rendering attempt at a fixed working precision. The mantissa is
// scaled to `digits` integer digits and rounded with mpfr_rint, whose
// MPFR_RNDN mode is exactly the round-half-even the integer renderer uses.
std::string render_once(const Real& lnv, unsigned digits, mpfr_prec_t prec) {
  Real ln10 = Real::of_ui(10, prec);
  mpfr_log(ln10.raw(), ln10.raw(), MPFR_RNDN);
  Real L = lnv.rounded_to(prec) / ln10;
  long E = L.floor_to_long();
  Real frac = L - Real::of_si(E, prec);  // exact: an integer shift of L
  Real mant = pow(10ul, frac);           // in [1, 10]

  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits - 1);
  Real scaled = mant * Real::of_integer(p10, prec);
  mpfr_rint(scaled.raw(), scaled.raw(), MPFR_RNDN);
  mpz_class m;
  mpfr_get_z(m.get_mpz_t(), scaled.raw(), MPFR_RNDN);

  std::string ms = m.get_str();
  if (ms.size() < digits) throw PrecisionError("mantissa lost digits while rendering");
  if (ms.size() > digits) {  // 9.99... rounded up to 10.0...
    ms.resize(digits);
    ++E;
  }
  return detail::format_scientific(ms, E);
}

}  // namespace

std::string render_ln_scientific(const LnValue& v, unsigned digits) {
  if (digits < 1) throw DomainError("digit count must be at least 1");
  if (!v.ln.is_finite()) throw DomainError("log value must be finite");

  mpfr_prec_t prec =
      std::max<mpfr_prec_t>(v.ln.precision(), 64 + 4 * static_cast<mpfr_prec_t>(digits));
  const mpfr_prec_t cap = std::max<mpfr_prec_t>(4096, 4 * prec);

  // Audit: the digits count only if 64 extra bits reproduce them. A value
  // sitting on a rounding boundary escalates until the cap, then errors
  // out rather than printing digits that may be wrong.
  for (;;) {
    const std::string at_prec = render_once(v.ln, digits, prec);
    const std::string audited = render_once(v.ln, digits, prec + 64);
    if (at_prec == audited) return at_prec;
    if (prec >= cap)
      throw PrecisionError("rendered digits unstable at " + std::to_string(cap) + " bits");
    prec *= 2;
  }
}

}  // namespace egf
