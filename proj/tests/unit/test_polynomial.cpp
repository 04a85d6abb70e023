#include "doctest.h"
#include "support/util.hpp"

#include "frobcore/errors.hpp"

using namespace frobcore;
using testutil::P;

TEST_CASE("field arithmetic") {
  PrimeFieldElement a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a * b).value() == 1);
  CHECK((a * a.inverse()).value() == 1);
  CHECK((-a).value() == 4);
  CHECK(a.pow(6).value() == 1);
  CHECK_THROWS(PrimeField(6));
  CHECK_THROWS(PrimeFieldElement(0, 5).inverse());
}

TEST_CASE("canonical printing and parsing") {
  Ring r(3, {"x", "y"});
  auto f = P(r, "(x - y)^3");
  CHECK(f == P(r, "x^3 - y^3"));
  CHECK(f.to_string() == "x^3 + 2*y^3");
  CHECK(P(r, f.to_string()) == f);
  CHECK(P(r, "2*x*y + 5").to_string() == "2*x*y + 2");
  CHECK(P(r, "0").is_zero());
  CHECK_THROWS_AS(P(r, "x + z"), ParseError);
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
}

TEST_CASE("orders sort terms") {
  Ring drl(2, {"x", "y", "z"});
  CHECK(P(drl, "x*z + y^2").to_string() == "y^2 + x*z");
  Ring lex(2, {"x", "y", "z"}, MonomialOrder::lex(3));
  CHECK(P(lex, "x*z + y^2").to_string() == "x*z + y^2");
  Ring blk(2, {"t", "x"}, MonomialOrder::block(2, 1));
  CHECK(P(blk, "x^5 + t").to_string() == "t + x^5");
}

TEST_CASE("pow uses Frobenius digits") {
  Ring r(5, {"x", "y"});
  auto f = P(r, "x + 2*y + 1");
  Polynomial naive = Polynomial::constant(r, 1);
  for (int i = 0; i < 13; ++i) naive = naive * f;
  CHECK(f.pow(13) == naive);
  CHECK(f.frobenius(5) == f.pow(5));
}

TEST_CASE("exact division and substitution") {
  Ring r(2, {"x", "y"});
  auto f = P(r, "x^2 + x*y + y"), g = P(r, "x + 1");
  Polynomial q(r);
  CHECK(divide_exact(f * g, g, q));
  CHECK(q == f);
  CHECK_FALSE(divide_exact(f, g, q));
  Ring s(2, {"t"});
  std::vector<Polynomial> img{P(s, "t"), P(s, "t^2")};
  CHECK(substitute(P(r, "x*y + y"), s, img) == P(s, "t^3 + t^2"));
}
