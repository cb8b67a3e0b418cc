#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "egf/errors.hpp"
#include "egf/poly.hpp"

using egf::ExpPolynomial;
using egf::parse_poly;

TEST_CASE("parsing a well-formed coefficient list") {
  const ExpPolynomial p = parse_poly("0,2,1");
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 0);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(2) == 1);
  CHECK(p.to_string() == "0,2,1");

  CHECK(parse_poly("0,1").degree() == 1);
  CHECK(parse_poly("0,0,1").coeff(1) == 0);
}

TEST_CASE("whitespace around coefficients is tolerated") {
  CHECK(parse_poly(" 0 , 2 ,\t1 ") == parse_poly("0,2,1"));
}

TEST_CASE("trailing zero coefficients are trimmed") {
  CHECK(parse_poly("0,2,1,0,0") == parse_poly("0,2,1"));
  CHECK(parse_poly("0,2,1,0").degree() == 2);
}

TEST_CASE("multi-word integers survive parsing") {
  const ExpPolynomial p = parse_poly("0,123456789012345678901234567890");
  CHECK(p.coeff(1) == mpz_class("123456789012345678901234567890"));
}

TEST_CASE("malformed text is a parse error") {
  CHECK_THROWS_AS(parse_poly("0,2,x"), egf::ParseError);
  CHECK_THROWS_AS(parse_poly("0,2.5"), egf::ParseError);
  CHECK_THROWS_AS(parse_poly(""), egf::ParseError);
  CHECK_THROWS_AS(parse_poly("0,,1"), egf::ParseError);
  CHECK_THROWS_AS(parse_poly("0,1,"), egf::ParseError);
}

TEST_CASE("invariant violations are domain errors naming the invariant") {
  CHECK_THROWS_WITH_AS(parse_poly("1,2"),
                       doctest::Contains("constant term must be 0"), egf::DomainError);
  CHECK_THROWS_WITH_AS(parse_poly("0,-1,2"), doctest::Contains("negative"), egf::DomainError);
  CHECK_THROWS_AS(parse_poly("0"), egf::DomainError);
  CHECK_THROWS_AS(parse_poly("0,0"), egf::DomainError);  // trims to a constant
}

TEST_CASE("signs are accepted by the parser, then validated as invariants") {
  CHECK(parse_poly("0,+2,+1") == parse_poly("0,2,1"));
}
