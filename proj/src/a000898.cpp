#include "egf/a000898.hpp"

#include <utility>
#include <vector>

#include "egf/errors.hpp"

namespace egf::a000898 {

namespace {

Real rn_closed_at(unsigned long n, mpfr_prec_t prec) {
  return (sqrt(Real::of_ui(2 * n + 1, prec)) - 1ul) / 2ul;
}

Real rn_expansion_at(unsigned long n, mpfr_prec_t prec) {
  const Real nn = Real::of_ui(n, prec);
  const Real half = Real::of_ui(1, prec) / 2ul;
  return sqrt(nn / 2ul) - half + 1ul / (sqrt(nn * 2ul) * 4ul);
}

}  // namespace

const ExpPolynomial& poly() {
  static const ExpPolynomial p(std::vector<mpz_class>{0, 2, 1});
  return p;
}

Real rn_closed(unsigned long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("saddle point is defined for n >= 1");
  return rn_closed_at(n, ctx.working()).rounded_to(ctx.bits);
}

Real rn_expansion(unsigned long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("saddle point is defined for n >= 1");
  return rn_expansion_at(n, ctx.working()).rounded_to(ctx.bits);
}

ExpansionReport expansion_report(unsigned long n, const PrecisionContext& ctx) {
  if (n < 10)
    throw DomainError("expansion report is defined for n >= 10; the truncations carry no "
                      "meaning at tiny n");
  const mpfr_prec_t wp = ctx.working();
  const Real r = rn_closed_at(n, wp);
  const Real nn = Real::of_ui(n, wp);
  const Real one = Real::of_ui(1, wp);
  const Real half = one / 2ul;
  const Real s = sqrt(nn * 2ul);        // sqrt(2n)
  const Real root_n2 = sqrt(nn / 2ul);  // sqrt(n/2)

  const Real direct_ln_f = r * r + r * 2ul;
  const Real approx_ln_f = nn / 2ul + root_n2 - half + log1p(1ul / (s * 4ul));
  const Real direct_n_ln_r = nn * log(r);
  const Real approx_n_ln_r = nn * log(root_n2) - root_n2 + 1ul / (s * 12ul);
  const Real direct_sqrt_b = sqrt(r * r * 4ul + r * 2ul);
  const Real approx_sqrt_b = s * (one - 1ul / (s * 2ul));

  auto out = [&ctx](const Real& v) { return v.rounded_to(ctx.bits); };
  return ExpansionReport{n,
                         out(r),
                         out(direct_ln_f),
                         out(approx_ln_f),
                         out(direct_n_ln_r),
                         out(approx_n_ln_r),
                         out(direct_sqrt_b),
                         out(approx_sqrt_b),
                         out(direct_ln_f - approx_ln_f),
                         out(direct_n_ln_r - approx_n_ln_r),
                         out(direct_sqrt_b - approx_sqrt_b)};
}

ClosedFormEstimate closed_form_estimate(unsigned long n, bool with_correction,
                                        const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("closed-form estimate is defined for n >= 1");
  const mpfr_prec_t wp = ctx.working();
  const Real nn = Real::of_ui(n, wp);
  const Real one = Real::of_ui(1, wp);
  const Real two = Real::of_ui(2, wp);

  // ln I* = sqrt(2n) - ln(2e)/2 + (n/2)(ln(2n) - 1) [+ ln(1 + sqrt2/(3 sqrt n))]
  Real v = sqrt(nn * 2ul) - (log(two) + one) / 2ul + nn / 2ul * (log(nn * 2ul) - one);
  if (with_correction) v = v + log1p(sqrt(two) / (sqrt(nn) * 3ul));
  return ClosedFormEstimate{n, with_correction, LnValue{v.rounded_to(ctx.bits)}};
}

ExactSequence recurrence(unsigned long N) {
  ExactSequence seq{poly(), {}};
  seq.terms.reserve(N + 1);
  seq.terms.emplace_back(1);
  if (N >= 1) seq.terms.emplace_back(2);
  for (unsigned long n = 2; n <= N; ++n) {
    mpz_class t = seq.terms[n - 2] * (n - 1);
    t += seq.terms[n - 1];
    t *= 2;
    seq.terms.push_back(std::move(t));
  }
  return seq;
}

}  // namespace egf::a000898
