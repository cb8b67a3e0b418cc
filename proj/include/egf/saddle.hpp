#pragma once

#include "egf/numerics.hpp"
#include "egf/poly.hpp"
#include "egf/precision.hpp"
#include "egf/real.hpp"

namespace egf {

// The positive solution of a(r) = n together with the achieved residual.
struct SaddlePoint {
  unsigned long n;
  Real r;
  Real residual;  // a(r) - n at the returned r
};

// The saddle-point estimate of the coefficient a_n = [z^n] exp(P(z)) and of
// the count I_n = n! a_n, kept in the log domain:
//
//   ln a_n ~ P(r) - n ln r - (1/2) ln(2 pi b(r))    at a(r) = n.
//
// The pieces are retained for diagnostics and for the expansion checks.
struct HaymanEstimate {
  unsigned long n;
  SaddlePoint saddle;
  Real ln_f_at_r;  // P(r)
  Real n_ln_r;
  Real b_at_r;
  LnValue ln_coefficient;
  LnValue ln_count;  // ln_coefficient.ln + ln(n!)
};

// P evaluated at a positive real point.
Real poly_at(const ExpPolynomial& p, const Real& r);

// a(r) = r (log f)'(r) = r P'(r) = sum_j j p_j r^j. Strictly increasing on
// r >= 0 for admitted P.
Real a_of_r(const ExpPolynomial& p, const Real& r);

// b(r) = r a'(r) = sum_j j^2 p_j r^j. Positive for r > 0.
Real b_of_r(const ExpPolynomial& p, const Real& r);

// Solves a(r) = n by safeguarded Newton: bracket the unique positive root,
// take Newton steps, and bisect whenever a step leaves the bracket. The
// result satisfies |a(r) - n| <= n 2^(4-bits).
SaddlePoint solve_saddle(const ExpPolynomial& p, unsigned long n, const PrecisionContext& ctx);

// Full estimate at the saddle, with exact ln(n!) so the only approximation
// present is the saddle-point formula itself.
HaymanEstimate hayman_coefficient_estimate(const ExpPolynomial& p, unsigned long n,
                                           const PrecisionContext& ctx);

}  // namespace egf
