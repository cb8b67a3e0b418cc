#include "egf/exact.hpp"

#include <set>
#include <utility>

namespace egf {

namespace {

// One recurrence step. `window[m % d]` must hold I_m for the last d indices
// m < n; `weights[j]` holds j*p_j. The falling factorial is built
// incrementally, so the step costs O(d) big-integer multiply-adds.
void next_term(const std::vector<mpz_class>& weights, const std::vector<mpz_class>& window,
               unsigned long n, mpz_class& ff, mpz_class& prod, mpz_class& out) {
  const std::size_t d = window.size();
  const std::size_t jmax = d < n ? d : static_cast<std::size_t>(n);
  out = 0;
  ff = 1;
  for (std::size_t j = 1; j <= jmax; ++j) {
    if (weights[j] != 0) {
      prod = ff * window[(n - j) % d];
      mpz_addmul(out.get_mpz_t(), weights[j].get_mpz_t(), prod.get_mpz_t());
    }
    ff *= static_cast<unsigned long>(n - j);
  }
}

template <typename Sink>
void run_recurrence(const ExpPolynomial& p, unsigned long N, Sink&& sink) {
  const std::size_t d = p.degree();
  std::vector<mpz_class> weights(d + 1);
  for (std::size_t j = 1; j <= d; ++j) weights[j] = j * p.coeff(j);

  std::vector<mpz_class> window(d);
  mpz_class term = 1, ff, prod;
  sink(0ul, term);
  window[0] = term;
  for (unsigned long n = 1; n <= N; ++n) {
    next_term(weights, window, n, ff, prod, term);
    sink(n, term);
    window[n % d] = term;
  }
}

}  // namespace

ExactSequence exact_terms(const ExpPolynomial& p, unsigned long N) {
  ExactSequence seq{p, {}};
  seq.terms.reserve(N + 1);
  run_recurrence(p, N, [&seq](unsigned long, const mpz_class& t) { seq.terms.push_back(t); });
  return seq;
}

void exact_terms_stream(const ExpPolynomial& p, unsigned long N,
                        const std::function<void(unsigned long, const mpz_class&)>& sink) {
  run_recurrence(p, N, sink);
}

std::map<unsigned long, mpz_class> exact_terms_at(const ExpPolynomial& p,
                                                  const std::vector<unsigned long>& ns) {
  std::map<unsigned long, mpz_class> out;
  if (ns.empty()) return out;
  const std::set<unsigned long> want(ns.begin(), ns.end());
  run_recurrence(p, *want.rbegin(), [&](unsigned long n, const mpz_class& t) {
    if (want.count(n)) out.emplace(n, t);
  });
  return out;
}

bool satisfies_recurrence(const ExactSequence& seq) {
  if (seq.terms.empty() || seq.terms[0] != 1) return false;
  const std::size_t d = seq.poly.degree();
  std::vector<mpz_class> weights(d + 1);
  for (std::size_t j = 1; j <= d; ++j) weights[j] = j * seq.poly.coeff(j);

  std::vector<mpz_class> window(d);
  mpz_class expected, ff, prod;
  window[0] = seq.terms[0];
  for (unsigned long n = 1; n < seq.terms.size(); ++n) {
    next_term(weights, window, n, ff, prod, expected);
    if (expected != seq.terms[n]) return false;
    window[n % d] = expected;
  }
  return true;
}

}  // namespace egf
