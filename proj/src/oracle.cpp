#include "egf/oracle.hpp"

namespace egf {

std::vector<mpq_class> series_exp_oracle(const ExpPolynomial& p, unsigned long N) {
  const std::size_t d = p.degree();
  std::vector<mpz_class> pk(N + 1);  // coefficients of P^k, truncated past z^N
  std::vector<mpq_class> c(N + 1);
  pk[0] = 1;
  c[0] = 1;
  mpz_class kfact = 1;
  for (unsigned long k = 1; k <= N; ++k) {
    std::vector<mpz_class> next(N + 1);
    bool any = false;
    for (unsigned long m = 0; m < N; ++m) {
      if (pk[m] == 0) continue;
      for (std::size_t j = 1; j <= d && m + j <= N; ++j) {
        if (p.coeff(j) != 0) {
          next[m + j] += pk[m] * p.coeff(j);
          any = true;
        }
      }
    }
    if (!any) break;  // P^k exceeded degree N, nothing more to add
    pk.swap(next);
    kfact *= k;
    for (unsigned long m = k; m <= N; ++m) {
      if (pk[m] != 0) c[m] += mpq_class(pk[m]) / mpq_class(kfact);
    }
  }
  return c;
}

}  // namespace egf
