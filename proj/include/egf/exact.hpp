#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

#include "egf/poly.hpp"

namespace egf {

// The exact integer terms I_0..I_N of the sequence whose exponential
// generating function is exp(P(z)).
struct ExactSequence {
  ExpPolynomial poly;
  std::vector<mpz_class> terms;
};

// Computes I_0..I_N by the recurrence obtained from f' = P'(z) f:
//
//   I_n = sum_{j=1..min(d,n)} j p_j (n-1)(n-2)...(n-j+1) I_{n-j}
//
// where the falling-factorial weight has j-1 factors (empty for j=1).
// For P = z^2 + 2z this specializes to I_n = 2(I_{n-1} + (n-1) I_{n-2}).
ExactSequence exact_terms(const ExpPolynomial& p, unsigned long N);

// Same recurrence, but delivers each (n, I_n) to the sink and keeps only a
// window of degree(P) terms alive. Storing every term to N = 10^5 costs
// gigabytes; one streamed pass costs megabytes.
void exact_terms_stream(const ExpPolynomial& p, unsigned long N,
                        const std::function<void(unsigned long, const mpz_class&)>& sink);

// Runs one streamed pass up to max(ns) and keeps just the requested terms.
std::map<unsigned long, mpz_class> exact_terms_at(const ExpPolynomial& p,
                                                  const std::vector<unsigned long>& ns);

// Re-derives every term past the base case from its predecessors and
// compares. True iff the whole list is consistent with the recurrence.
bool satisfies_recurrence(const ExactSequence& seq);

}  // namespace egf
