#include "egf/compare.hpp"

#include <cstddef>
#include <utility>

#include "egf/a000898.hpp"
#include "egf/errors.hpp"
#include "egf/exact.hpp"
#include "egf/int_render.hpp"
#include "egf/numerics.hpp"

namespace egf {

std::vector<ComparisonRow> comparison_rows(const std::vector<unsigned long>& ns, unsigned digits,
                                           const PrecisionContext& ctx) {
  for (unsigned long n : ns) {
    if (n < 1) throw DomainError("comparison requires n >= 1");
  }
  const auto exact = exact_terms_at(a000898::poly(), ns);  // sorted, deduplicated
  const mpfr_prec_t wp = ctx.working();

  std::vector<ComparisonRow> rows;
  rows.reserve(exact.size());
  for (const auto& [n, value] : exact) {
    const LnValue ln_exact = LnValue::of_integer(value, ctx);
    const auto est = a000898::closed_form_estimate(n, true, ctx);
    const Real ratio = expm1(est.value.ln.rounded_to(wp) - ln_exact.ln.rounded_to(wp));
    rows.push_back(ComparisonRow{n, render_int_scientific(value, digits),
                                 render_ln_scientific(est.value, digits), ln_exact.ln,
                                 est.value.ln, ratio.rounded_to(ctx.bits),
                                 (ratio * Real::of_ui(n, wp)).rounded_to(ctx.bits)});
  }
  return rows;
}

ErrorOrderFit fit_error_order(std::vector<ComparisonRow> rows, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  std::vector<Real> xs, ys;
  unsigned long first_n = 0;
  bool spread = false;
  for (const auto& row : rows) {
    if (row.ratio_minus_one.sign() == 0) continue;
    if (xs.empty())
      first_n = row.n;
    else if (row.n != first_n)
      spread = true;
    xs.push_back(log(Real::of_ui(row.n, wp)));
    ys.push_back(log(abs(row.ratio_minus_one)));
  }
  if (xs.size() < 3)
    throw DomainError("error-order fit needs at least 3 rows with nonzero error");
  // identical n would leave den as pure rounding residue, not an exact zero
  if (!spread) throw DomainError("error-order fit needs spread across n");

  Real sx = Real::of_ui(0, wp);
  Real sy = sx, sxx = sx, sxy = sx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx = sx + xs[i];
    sy = sy + ys[i];
    sxx = sxx + xs[i] * xs[i];
    sxy = sxy + xs[i] * ys[i];
  }
  const unsigned long m = xs.size();
  const Real den = sxx * m - sx * sx;
  if (den.sign() == 0) throw DomainError("error-order fit needs spread across n");
  const Real slope = (sxy * m - sx * sy) / den;
  const Real intercept = (sy - slope * sx) / m;
  return ErrorOrderFit{std::move(rows), slope.rounded_to(ctx.bits),
                       intercept.rounded_to(ctx.bits)};
}

}  // namespace egf
