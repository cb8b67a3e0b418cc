#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace egf {

// Integer-coefficient polynomial P(z), the exponent of a generating
// function exp(P(z)). Coefficients are stored ascending; index j holds p_j.
//
// Admitted polynomials have p_0 = 0 (a nonzero constant term would rescale
// every term by exp(p_0) and break integrality), all p_j >= 0, and a
// positive leading coefficient with degree >= 1. Construction enforces
// this; trailing zero coefficients are trimmed.
class ExpPolynomial {
 public:
  explicit ExpPolynomial(std::vector<mpz_class> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const mpz_class& coeff(std::size_t j) const { return coeffs_[j]; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  // Canonical comma-separated ascending coefficient list, e.g. "0,2,1".
  std::string to_string() const;

  bool operator==(const ExpPolynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<mpz_class> coeffs_;
};

// Parses a comma-separated ascending coefficient list such as "0,2,1".
ExpPolynomial parse_poly(const std::string& text);

}  // namespace egf
