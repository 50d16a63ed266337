#include <random>

#include "doctest.h"
#include "qloop/error.hpp"
#include "qloop/textio.hpp"

using namespace qloop;

namespace {
Element mono(std::initializer_list<Letter> ls) { return Element::from_word(Word(ls)); }
}  // namespace

TEST_SUITE("textio") {

TEST_CASE("parses plain words") {
  Element x = parse_element("E(1,0)E(1,1)", 1);
  CHECK(x == mono({Letter::e(1, 0), Letter::e(1, 1)}));
  CHECK(parse_element("1", 1) == Element::one());
  CHECK(parse_element("0", 1).is_zero());
  CHECK(parse_element("E(2,-3)", 2) == mono({Letter::e(2, -3)}));
  CHECK(parse_element("H(1,2)xi(1,1)", 1) == mono({Letter::h(1, 2), Letter::xi(1, 1)}));
  CHECK(parse_element("b(1,[2,1])", 1) == mono({Letter::schur_b(1, {2, 1})}));
}

TEST_CASE("serialization is canonical") {
  Element x = parse_element("(1-v^2)/(1) * E(1,0)", 1);
  CHECK(serialize(x) == "(1 - v^2) * E(1,0)");
  // Parsing the canonical form reproduces the element.
  CHECK(parse_element(serialize(x), 1) == x);
}

TEST_CASE("signs and sums") {
  Element x = parse_element("E(1,1) - E(1,0)", 1);
  CHECK(x == mono({Letter::e(1, 1)}) - mono({Letter::e(1, 0)}));
  Element y = parse_element("-2 * E(1,0) + v^-1", 1);
  CHECK(y.coeff({Letter::e(1, 0)}) == Scalar(-2));
  CHECK(y.coeff({}) == Scalar::v(-1));
  Element z = parse_element("- E(1,0)", 1);
  CHECK(z == Element() - mono({Letter::e(1, 0)}));
}

TEST_CASE("scalar coefficients with denominators") {
  Element x = parse_element("(v^-4)/(v^-2 - 1) * E(1,2)", 1);
  CHECK(x.coeff({Letter::e(1, 2)}) == Scalar::v(-4) / (Scalar::v(-2) - Scalar(1)));
  CHECK(parse_element(serialize(x), 1) == x);
}

TEST_CASE("units vanish from words") {
  CHECK(parse_element("xi(1,0)", 1) == Element::one());
  CHECK(parse_element("theta(1,0)E(1,1)", 1) == mono({Letter::e(1, 1)}));
  CHECK(parse_element("b(1,[])", 1) == Element::one());
}

TEST_CASE("rejects malformed input with positions") {
  CHECK_THROWS_AS(parse_element("E(3,0)", 2), ParseError);
  CHECK_THROWS_AS(parse_element("E(0,0)", 2), ParseError);
  CHECK_THROWS_AS(parse_element("H(1,0)", 1), ParseError);
  CHECK_THROWS_AS(parse_element("xi(1,-1)", 1), ParseError);
  CHECK_THROWS_AS(parse_element("b(1,[1,2])", 1), ParseError);
  CHECK_THROWS_AS(parse_element("E(1,0) +", 1), ParseError);
  CHECK_THROWS_AS(parse_element("", 1), ParseError);
  CHECK_THROWS_AS(parse_element("E(1,0) E(1,1) garbage", 1), ParseError);
  CHECK_THROWS_AS(parse_element("2 ** E(1,0)", 1), ParseError);
  try {
    parse_element("E(9,0)", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("scalar expression grammar") {
  CHECK(parse_scalar("v") == Scalar::v(1));
  CHECK(parse_scalar("v^-2 - 1") == Scalar::v(-2) - Scalar(1));
  CHECK(parse_scalar("(1 - v^2)/(v^3)") == (Scalar(1) - Scalar::v(2)) / Scalar::v(3));
  CHECK(parse_scalar("2*v^2") == Scalar(2) * Scalar::v(2));
  CHECK(parse_scalar("-(v + 1)^2") == -(Scalar::v(1) + Scalar(1)) * (Scalar::v(1) + Scalar(1)));
  CHECK(parse_scalar("v^0") == Scalar(1));
  CHECK(parse_scalar("12345678901234567890") == Scalar(BigInt("12345678901234567890")));
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("v^"), ParseError);
}

TEST_CASE("round trip on a pseudo-random corpus") {
  // 200 deterministic elements over a rank-2 alphabet with mixed letter
  // kinds and scalar shapes, exercising every serializer branch.
  std::mt19937 rng(20260819);
  auto rnd = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };

  auto random_scalar = [&]() {
    Laurent num;
    int nterms = rnd(1, 3);
    for (int t = 0; t < nterms; ++t)
      num += Laurent::term(rnd(-9, 9), rnd(-4, 4));
    if (num.is_zero()) num = Laurent(1);
    if (rnd(0, 1) == 0) return Scalar(num);
    Laurent den;
    int dterms = rnd(1, 2);
    for (int t = 0; t < dterms; ++t) den += Laurent::term(rnd(-3, 3), rnd(0, 3));
    if (den.is_zero()) den = Laurent(2);
    return Scalar(num, den);
  };

  auto random_letter = [&]() {
    int node = rnd(1, 2);
    switch (rnd(0, 5)) {
      case 0: return Letter::e(node, rnd(-5, 5));
      case 1: return Letter::h(node, rnd(1, 4));
      case 2: return Letter::xi(node, rnd(1, 3));
      case 3: return Letter::chi(node, rnd(1, 3));
      case 4: return Letter::theta(node, rnd(1, 3));
      default: {
        Partition lam;
        int len = rnd(1, 3);
        int part = rnd(1, 3);
        for (int k = 0; k < len; ++k) {
          lam.push_back(part);
          part = rnd(1, part);
        }
        return Letter::schur_b(node, lam);
      }
    }
  };

  for (int n = 0; n < 200; ++n) {
    Element x;
    int terms = rnd(0, 4);
    for (int t = 0; t < terms; ++t) {
      Word w;
      int len = rnd(0, 4);
      for (int k = 0; k < len; ++k) w.push_back(random_letter());
      x.add_term(std::move(w), random_scalar());
    }
    std::string text = serialize(x);
    Element back = parse_element(text, 2);
    CHECK(back == x);
    // Serialization is a canonical form: stable under one more round trip.
    CHECK(serialize(back) == text);
  }
}

}  // TEST_SUITE
