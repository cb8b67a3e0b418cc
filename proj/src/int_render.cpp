#include "egf/int_render.hpp"

#include "egf/detail/sci_format.hpp"
#include "egf/errors.hpp"

namespace egf {

namespace {

// In-place decimal increment; returns true when the carry runs off the front.
bool increment_digits(std::string& d) {
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] != '9') {
      ++d[i];
      return false;
    }
    d[i] = '0';
  }
  return true;
}

}  // namespace

std::string render_int_scientific(const mpz_class& x, unsigned digits) {
  if (digits < 1) throw DomainError("digit count must be at least 1");
  if (x <= 0) throw DomainError("scientific rendering requires a positive integer");

  std::string s = x.get_str();
  long exponent = static_cast<long>(s.size()) - 1;

  std::string mant;
  if (s.size() <= digits) {
    mant = s + std::string(digits - s.size(), '0');
  } else {
    mant = s.substr(0, digits);
    const char next = s[digits];
    bool round_up;
    if (next > '5') {
      round_up = true;
    } else if (next < '5') {
      round_up = false;
    } else {
      // exact tie iff the rest is all zeros; break towards an even digit
      const bool tie = s.find_first_not_of('0', digits + 1) == std::string::npos;
      round_up = tie ? ((mant.back() - '0') % 2 != 0) : true;
    }
    if (round_up && increment_digits(mant)) {
      mant.front() = '1';  // 99..9 -> 10..0, one more decimal place
      ++exponent;
    }
  }
  return detail::format_scientific(mant, exponent);
}

}  // namespace egf
