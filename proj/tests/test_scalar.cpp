#include "doctest.h"
#include "qloop/error.hpp"
#include "qloop/scalar.hpp"

using namespace qloop;

TEST_SUITE("scalar") {

TEST_CASE("laurent canonical term order and string form") {
  Laurent l = Laurent::term(1, -2) + Laurent::term(-1, 0) + Laurent::term(2, 3);
  CHECK(l.str() == "v^-2 - 1 + 2*v^3");
  CHECK(l.coeff(-2) == 1);
  CHECK(l.coeff(5) == 0);
  CHECK(Laurent().is_zero());
}

TEST_CASE("canonical form clears denominator content and sign") {
  // (2 - 2v^2) / (4v) reduces to (1 - v^2)/(2v); the v-power moves into the
  // Laurent numerator so the denominator keeps min_exp 0.
  Scalar s(Laurent::term(2, 0) + Laurent::term(-2, 2), Laurent::term(4, 1));
  Scalar expect(Laurent::term(1, -1) + Laurent::term(-1, 1), Laurent(2));
  CHECK(s == expect);
  CHECK(s.den().min_exp() == 0);
  CHECK(s.den().leading_coeff() > 0);

  // A negative-leading denominator flips into the numerator.
  Scalar t(Laurent(1), Laurent::term(-1, 1) + Laurent(1));
  CHECK(t.den().leading_coeff() > 0);
  CHECK(t * (Scalar(1) - Scalar::v(1)) == Scalar(1));
}

TEST_CASE("field arithmetic round trips") {
  Scalar a = (Scalar(1) - Scalar::v(2)) / Scalar::v(3);
  Scalar b = Scalar::v(-1) + Scalar(5);
  CHECK((a / b) * b == a);
  CHECK(a - a == Scalar());
  CHECK((a + b) - b == a);
  CHECK(-(-a) == a);
  CHECK_THROWS_AS(a / Scalar(), DivisionByZero);
}

TEST_CASE("quantum integers") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1).is_one());
  CHECK(qint(2) == Scalar::v(-1) + Scalar::v(1));
  CHECK(qint(3) == Scalar::v(-2) + Scalar(1) + Scalar::v(2));
  CHECK(qint(-4) == -qint(4));
  // [l] = (v^-l - v^l)/(v^-1 - v) exactly.
  for (long l = 1; l <= 6; ++l)
    CHECK(qint(l) * (Scalar::v(-1) - Scalar::v(1)) == Scalar::v(-(int)l) - Scalar::v((int)l));
}

TEST_CASE("factorials and binomials") {
  CHECK(qfact(0).is_one());
  CHECK(qfact(3) == qint(1) * qint(2) * qint(3));
  CHECK(qbinom(4, 2) * qfact(2) * qfact(2) == qfact(4));
  CHECK(qbinom(5, 0).is_one());
  CHECK(qbinom(5, 5).is_one());
  CHECK(qbinom(5, 2) == qbinom(5, 3));
}

TEST_CASE("node-stretched variants substitute v -> v^r") {
  CHECK(qint_node(3, 2) == qint(3).stretched(2));
  CHECK(qint_node(2, 3) == Scalar::v(-3) + Scalar::v(3));
  CHECK(qfact_node(3, 2) == qint_node(1, 2) * qint_node(2, 2) * qint_node(3, 2));
  CHECK(qbinom_node(4, 2, 2) * qfact_node(2, 2) * qfact_node(2, 2) == qfact_node(4, 2));
}

TEST_CASE("bar involution") {
  Scalar s = (Scalar(1) - Scalar::v(2)) / (Scalar::v(3) + Scalar(1));
  CHECK(s.bar().bar() == s);
  CHECK(Scalar::v(2).bar() == Scalar::v(-2));
  for (long l = 0; l <= 5; ++l) CHECK(qint(l).bar() == qint(l));
  Scalar t = Scalar::v(-1) + Scalar(7);
  CHECK((s + t).bar() == s.bar() + t.bar());
  CHECK((s * t).bar() == s.bar() * t.bar());
}

TEST_CASE("valuation at v = 0 and the local ring A") {
  CHECK(Scalar::v(2).val0() == 2);
  CHECK(Scalar::v(-1).val0() == -1);
  CHECK_FALSE(Scalar().val0().has_value());

  Scalar s = (Scalar(1) + Scalar::v(1)) / (Scalar(1) - Scalar::v(1));
  CHECK(s.val0() == 0);
  CHECK(s.in_A());
  CHECK(s.residue_at_zero() == 1);

  Scalar half = Scalar(1) / Scalar(2);
  CHECK(half.in_A());
  CHECK(half.residue_at_zero() == mpq_class(1, 2));

  Scalar t = Scalar::v(1) / (Scalar(1) + Scalar::v(1));
  CHECK(t.val0() == 1);
  CHECK(t.residue_at_zero() == 0);
  CHECK_FALSE((Scalar(1) / Scalar::v(1)).in_A());
}

TEST_CASE("string forms") {
  CHECK(Scalar().str() == "0");
  CHECK(Scalar(3).str() == "3");
  CHECK(Scalar::v(-2).str() == "v^-2");
  Scalar s = Scalar(1) / (Scalar::v(-2) - Scalar(1));
  CHECK(s.str() == "(1)/(v^-2 - 1)");
}

}  // TEST_SUITE
