#pragma once

#include "egf/exact.hpp"
#include "egf/numerics.hpp"
#include "egf/poly.hpp"
#include "egf/precision.hpp"
#include "egf/real.hpp"

// Closed-form results specific to the symmetric-involution counts
// (OEIS A000898), whose EGF is exp(z^2 + 2z). Everything here has an exact
// generic counterpart in the saddle module; these are the hand-derived
// formulas, kept separate so the two paths can check each other.
namespace egf::a000898 {

// The sequence's exponent polynomial, P(z) = z^2 + 2z.
const ExpPolynomial& poly();

// Exact saddle point r_n = (sqrt(2n+1) - 1)/2, the positive root of
// a(r) = 2r^2 + 2r = n.
Real rn_closed(unsigned long n, const PrecisionContext& ctx);

// Truncated expansion sqrt(n/2) - 1/2 + 1/(4 sqrt(2n)). Its distance from
// rn_closed shrinks like n^(-3/2); no accuracy contract below n = 10.
Real rn_expansion(unsigned long n, const PrecisionContext& ctx);

// The intermediate quantities of the saddle evaluation at r_n, each in its
// direct form and in the truncated form the closed formula is assembled
// from, together with the remainders. The two log-scale remainders are
// O(1/n) and the sqrt_b remainder is O(1/sqrt n) absolute, O(1/n) relative:
// under those scalings each stays inside a fixed band over n = 100..100000.
struct ExpansionReport {
  unsigned long n;
  Real r;              // rn_closed(n)
  Real direct_ln_f;    // r^2 + 2r
  Real approx_ln_f;    // n/2 + sqrt(n/2) - 1/2 + ln(1 + 1/(4 sqrt(2n)))
  Real direct_n_ln_r;  // n ln r
  Real approx_n_ln_r;  // n ln sqrt(n/2) - sqrt(n/2) + 1/(12 sqrt(2n))
  Real direct_sqrt_b;  // sqrt(4r^2 + 2r)
  Real approx_sqrt_b;  // sqrt(2n) (1 - 1/(2 sqrt(2n)))
  Real rem_ln_f;       // the three direct - approx differences
  Real rem_n_ln_r;
  Real rem_sqrt_b;
};

// Requires n >= 10; the truncations mean nothing at tiny n.
ExpansionReport expansion_report(unsigned long n, const PrecisionContext& ctx);

// ln of I_n* = e^sqrt(2n) / sqrt(2e) * (2n/e)^(n/2) * (1 + sqrt(2)/(3 sqrt(n))),
// with the last factor present only when with_correction is set. The
// uncorrected variant exists to measure the correction term itself.
struct ClosedFormEstimate {
  unsigned long n;
  bool with_correction;
  LnValue value;
};

ClosedFormEstimate closed_form_estimate(unsigned long n, bool with_correction,
                                        const PrecisionContext& ctx);

// The literal recurrence I_n = 2(I_{n-1} + (n-1) I_{n-2}) with I_0 = 1,
// I_1 = 2, written out by hand. An independent path against the generic
// recurrence engine; the two must agree term for term.
ExactSequence recurrence(unsigned long N);

}  // namespace egf::a000898
