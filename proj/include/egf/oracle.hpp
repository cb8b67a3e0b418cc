#pragma once

#include <gmpxx.h>

#include <vector>

#include "egf/poly.hpp"

namespace egf {

// Brute-force cross-check for exact_terms: the ordinary power-series
// coefficients c_0..c_N of exp(P(z)), obtained by summing the truncated
// powers P^k / k! in exact rational arithmetic. n! * c_n must reproduce
// the recurrence output. Meant for small N; every coefficient of P^k is
// carried explicitly, so the cost grows quadratically with N.
std::vector<mpq_class> series_exp_oracle(const ExpPolynomial& p, unsigned long N);

}  // namespace egf
