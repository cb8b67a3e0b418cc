#include "egf/saddle.hpp"

#include "egf/errors.hpp"

namespace egf {

namespace {

// Horner evaluation of sum_j j^k p_j r^j for k = 0, 1, 2. The j^k p_j
// weights stay exact integers; only the powers of r round.
Real weighted_sum(const ExpPolynomial& p, const Real& r, unsigned k) {
  auto weight = [&](std::size_t j) {
    mpz_class w = p.coeff(j);
    for (unsigned i = 0; i < k; ++i) w *= static_cast<unsigned long>(j);
    return w;
  };
  const std::size_t d = p.degree();
  Real acc = Real::of_integer(weight(d), r.precision());
  for (std::size_t j = d; j-- > 0;) acc = acc * r + weight(j);
  return acc;
}

}  // namespace

Real poly_at(const ExpPolynomial& p, const Real& r) { return weighted_sum(p, r, 0); }
Real a_of_r(const ExpPolynomial& p, const Real& r) { return weighted_sum(p, r, 1); }
Real b_of_r(const ExpPolynomial& p, const Real& r) { return weighted_sum(p, r, 2); }

SaddlePoint solve_saddle(const ExpPolynomial& p, unsigned long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("saddle point is defined for n >= 1");

  const mpfr_prec_t wp = ctx.working();
  const Real target = Real::of_ui(n, wp);
  const Real tol = target * Real::two_pow(4 - static_cast<long>(ctx.bits), wp);
  auto g = [&](const Real& r) { return a_of_r(p, r) - target; };

  // Leading-term guess d p_d r^d = n, then expand to a bracket with
  // g(lo) < 0 <= g(hi). a is strictly increasing, so the root is unique.
  const std::size_t d = p.degree();
  const Real lead = Real::of_integer(p.coeff(d), wp) * static_cast<unsigned long>(d);
  Real guess = exp(log(target / lead) / static_cast<unsigned long>(d));
  Real lo = Real::of_ui(0, wp);
  Real hi = guess;
  while (g(hi).sign() < 0) {
    lo = hi;
    hi = hi * 2ul;
  }

  // Newton from the high end; a step that leaves the bracket is replaced
  // by a bisection, so progress never stalls.
  Real r = hi;
  Real res = g(r);
  bool converged = false;
  for (int it = 0; it < 20000; ++it) {
    if (abs(res) <= tol) {
      converged = true;
      break;
    }
    if (res.sign() < 0) {
      lo = r;
    } else {
      hi = r;
    }
    bool stepped = false;
    if (r.sign() > 0) {
      const Real b = b_of_r(p, r);
      if (b.sign() > 0) {
        const Real cand = r - res * r / b;  // g'(r) = a'(r) = b(r)/r
        if (lo < cand && cand < hi) {
          r = cand;
          stepped = true;
        }
      }
    }
    if (!stepped) r = (lo + hi) / 2ul;
    res = g(r);
  }
  if (!converged) {
    throw SolveError("saddle iteration for n=" + std::to_string(n) +
                     " did not meet tolerance: bracket [" + lo.str(20) + ", " + hi.str(20) +
                     "], residual " + res.str(8));
  }

  // Deliver r at the requested precision when the rounded point still
  // meets the residual bound, otherwise keep the working-precision point.
  Real r_out = r.rounded_to(ctx.bits);
  Real res_out = g(r_out.rounded_to(wp));
  if (!(abs(res_out) <= tol)) {
    r_out = r;
    res_out = res;
  }
  return SaddlePoint{n, r_out, res_out};
}

HaymanEstimate hayman_coefficient_estimate(const ExpPolynomial& p, unsigned long n,
                                           const PrecisionContext& ctx) {
  const SaddlePoint sp = solve_saddle(p, n, ctx);
  const mpfr_prec_t wp = ctx.working();
  const Real r = sp.r.rounded_to(wp);

  const Real lnf = poly_at(p, r);
  const Real nlnr = Real::of_ui(n, wp) * log(r);
  const Real b = b_of_r(p, r);
  if (b.sign() <= 0) throw SolveError("b(r) must be positive at the saddle");

  const Real two_pi_b = Real::of_ui(2, wp) * Real::pi(wp) * b;
  const Real ln_coeff = lnf - nlnr - log(two_pi_b) / 2ul;
  const Real ln_cnt = ln_coeff + ln_factorial(n, ctx).rounded_to(wp);

  return HaymanEstimate{n,
                        sp,
                        lnf.rounded_to(ctx.bits),
                        nlnr.rounded_to(ctx.bits),
                        b.rounded_to(ctx.bits),
                        LnValue{ln_coeff.rounded_to(ctx.bits)},
                        LnValue{ln_cnt.rounded_to(ctx.bits)}};
}

}  // namespace egf
