#include "egf/poly.hpp"

#include <cctype>
#include <sstream>

#include "egf/errors.hpp"

namespace egf {

ExpPolynomial::ExpPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) throw DomainError("coefficient list is empty");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] < 0)
      throw DomainError("coefficient of z^" + std::to_string(j) +
                        " is negative; all coefficients must be nonnegative");
  }
  if (coeffs_[0] != 0)
    throw DomainError(
        "constant term must be 0: a nonzero p_0 rescales every term by exp(p_0) "
        "and the terms stop being integers");
  if (degree() < 1) throw DomainError("degree must be at least 1");
}

std::string ExpPolynomial::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out << ',';
    out << coeffs_[j].get_str();
  }
  return out.str();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool looks_like_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

ExpPolynomial parse_poly(const std::string& text) {
  std::vector<mpz_class> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string token = trim(text.substr(start, comma == std::string::npos
                                                    ? std::string::npos
                                                    : comma - start));
    if (token.empty())
      throw ParseError("empty coefficient at index " + std::to_string(coeffs.size()));
    if (!looks_like_integer(token))
      throw ParseError("'" + token + "' is not an integer");
    if (token.front() == '+') token.erase(0, 1);  // mpz_set_str takes only '-'
    coeffs.emplace_back(token, 10);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ExpPolynomial(std::move(coeffs));
}

}  // namespace egf
