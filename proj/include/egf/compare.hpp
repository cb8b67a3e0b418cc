#pragma once

#include <string>
#include <vector>

#include "egf/precision.hpp"
#include "egf/real.hpp"

namespace egf {

// One row of the comparison between the exact count I_n and the corrected
// closed-form estimate I_n*, the table the whole artifact exists to
// reproduce. Strings are round-half-even scientific renderings; the error
// is computed in the log domain, never by dividing the huge values.
struct ComparisonRow {
  unsigned long n;
  std::string exact_str;
  std::string estimate_str;
  Real ln_exact;
  Real ln_estimate;
  Real ratio_minus_one;  // expm1(ln_estimate - ln_exact)
  Real scaled_error;     // ratio_minus_one * n
};

// Builds one row per distinct n, ascending. A single streamed recurrence
// pass up to the largest n feeds every row.
std::vector<ComparisonRow> comparison_rows(const std::vector<unsigned long>& ns, unsigned digits,
                                           const PrecisionContext& ctx);

// Least-squares fit of ln|ratio-1| against ln n. A slope near -1 is the
// empirical footprint of an O(1/n) error term.
struct ErrorOrderFit {
  std::vector<ComparisonRow> rows;
  Real slope;
  Real intercept;
};

// Rows with exactly zero error are excluded from the fit; at least three
// rows must remain and they cannot all share one n.
ErrorOrderFit fit_error_order(std::vector<ComparisonRow> rows, const PrecisionContext& ctx);

}  // namespace egf
