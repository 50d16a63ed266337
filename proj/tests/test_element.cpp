#include "doctest.h"
#include "qloop/element.hpp"
#include "qloop/error.hpp"
#include "qloop/normal_order.hpp"

using namespace qloop;

namespace {
Element mono(std::initializer_list<Letter> ls) { return Element::from_word(Word(ls)); }
}  // namespace

TEST_SUITE("element") {

TEST_CASE("letters print compactly") {
  CHECK(Letter::e(1, 0).str() == "E(1,0)");
  CHECK(Letter::e(2, -3).str() == "E(2,-3)");
  CHECK(Letter::h(1, 2).str() == "H(1,2)");
  CHECK(Letter::xi(1, 1).str() == "xi(1,1)");
  CHECK(Letter::theta(2, 4).str() == "theta(2,4)");
  CHECK(Letter::schur_b(1, {2, 1}).str() == "b(1,[2,1])");
  CHECK(word_str({}) == "1");
  CHECK(word_str({Letter::e(1, 0), Letter::e(1, 1)}) == "E(1,0)E(1,1)");
}

TEST_CASE("canonical words sort maximal H runs") {
  Word w = {Letter::e(1, 2), Letter::h(2, 1), Letter::h(1, 1), Letter::e(1, 0), Letter::xi(1, 3),
            Letter::h(1, 1)};
  Word c = canonical_word(w);
  CHECK(is_canonical_word(c));
  // The E letters keep their places; each H-run between them is sorted.
  CHECK(c[0] == Letter::e(1, 2));
  CHECK(c[3] == Letter::e(1, 0));
  CHECK(c[1] <= c[2]);
  CHECK(c[4] <= c[5]);
  // Sorting an H-run does not change the element it denotes.
  CHECK(Element::from_word(w) == Element::from_word(c));
}

TEST_CASE("add_term merges and drops zeros") {
  Element x;
  x.add_term({Letter::e(1, 0)}, Scalar(2));
  x.add_term({Letter::e(1, 0)}, Scalar(-2));
  CHECK(x.is_zero());
  x.add_term({Letter::h(2, 1), Letter::h(1, 1)}, Scalar(1));
  x.add_term({Letter::h(1, 1), Letter::h(2, 1)}, Scalar(1));
  CHECK(x.term_count() == 1);
  CHECK(x.coeff(canonical_word({Letter::h(2, 1), Letter::h(1, 1)})) == Scalar(2));
}

TEST_CASE("weights add letter contributions") {
  Word w = {Letter::e(1, 2), Letter::h(1, 3), Letter::e(2, -1), Letter::schur_b(2, {2, 1})};
  Weight a = weight_of(w, 2);
  CHECK(a.q == std::vector<int>{1, 1});
  CHECK(a.d == 2 + 3 - 1 + 3);
  CHECK(weight_of({}, 2) == Weight::zero(2));

  Element x = mono({Letter::e(1, 0)}) + mono({Letter::e(1, 1)});
  CHECK_FALSE(x.is_weight_homogeneous(1));
  CHECK(x.split_by_weight(1).size() == 2);
  CHECK_THROWS_AS(x.weight(1), DomainError);
}

TEST_CASE("normal ordering moves H right and shifts degrees") {
  CartanData sl2 = CartanData::sl2();
  // H(1,1) E(1,0) = E(1,0) H(1,1) + [2] E(1,1)   (b_11 = 2)
  Element lhs = mono({Letter::h(1, 1), Letter::e(1, 0)});
  Element expect = mono({Letter::e(1, 0), Letter::h(1, 1)});
  expect.add_term({Letter::e(1, 1)}, qint(2));
  Element n = normal_order_H(lhs, sl2);
  CHECK(n == expect);
  CHECK(normal_order_H(n, sl2) == n);
  for (const auto& [w, c] : n.terms()) CHECK(is_normal_ordered(w));

  // H(1,2) E(1,0) picks up the divided coefficient [2 b_11]/2 = [4]/2.
  Element lhs2 = mono({Letter::h(1, 2), Letter::e(1, 0)});
  Element expect2 = mono({Letter::e(1, 0), Letter::h(1, 2)});
  expect2.add_term({Letter::e(1, 2)}, qint(4) / Scalar(2));
  CHECK(normal_order_H(lhs2, sl2) == expect2);
}

TEST_CASE("normal ordering expands series letters") {
  CartanData sl2 = CartanData::sl2();
  // xi_1 = p_1, so xi(1,1) E(1,0) = E(1,0) xi-expansion + [2] E(1,1).
  Element lhs = mono({Letter::xi(1, 1), Letter::e(1, 0)});
  Element n = normal_order_H(lhs, sl2);
  Element expect = mono({Letter::e(1, 0), Letter::h(1, 1)});
  expect.add_term({Letter::e(1, 1)}, qint(2));
  CHECK(n == expect);
}

TEST_CASE("rank-1 straightening of an adjacent pair") {
  CartanData sl2 = CartanData::sl2();
  // E_0 E_1 = v^2 E_1 E_0.
  Element x = mono({Letter::e(1, 0), Letter::e(1, 1)});
  Element s = straighten_rank1(x, sl2);
  Element expect;
  expect.add_term({Letter::e(1, 1), Letter::e(1, 0)}, Scalar::v(2));
  CHECK(s == expect);
}

TEST_CASE("rank-1 straightening across a degree gap") {
  CartanData sl2 = CartanData::sl2();
  // E_0 E_2 = v^2 E_2 E_0 + (v^2 - 1) E_1 E_1.
  Element x = mono({Letter::e(1, 0), Letter::e(1, 2)});
  Element s = straighten_rank1(x, sl2);
  Element expect;
  expect.add_term({Letter::e(1, 2), Letter::e(1, 0)}, Scalar::v(2));
  expect.add_term({Letter::e(1, 1), Letter::e(1, 1)}, Scalar::v(2) - Scalar(1));
  CHECK(s == expect);
  // Already non-increasing words are fixed points.
  CHECK(straighten_rank1(s, sl2) == s);
}

TEST_CASE("straightening preserves weight and passes H tails through") {
  CartanData sl2 = CartanData::sl2();
  Element x = mono({Letter::e(1, 0), Letter::e(1, 3), Letter::h(1, 1)});
  Element s = straighten_rank1(x, sl2);
  CHECK(s.weight(1) == x.weight(1));
  for (const auto& [w, c] : s.terms()) {
    REQUIRE(w.size() == 3);
    CHECK(w[0].degree >= w[1].degree);
    CHECK(w[2] == Letter::h(1, 1));
  }
}

TEST_CASE("residual elements have the expected shape") {
  CartanData sl2 = CartanData::sl2();
  Element q = quadratic_residual(1, 1, 0, 0, sl2);
  // v^2 E_1 E_0 - E_0 E_1 - E_0 E_1 + v^2 E_1 E_0 collapses to two words.
  CHECK(q.term_count() == 2);
  CHECK(q.weight(1) == Weight({2}, 1));

  CartanData a2 = CartanData::a2();
  Element s = serre_residual(1, 2, {0, 0}, 0, a2);
  CHECK_FALSE(s.is_zero());
  CHECK(s.weight(2) == Weight({2, 1}, 0));
  CHECK_THROWS_AS(serre_residual(1, 1, {0, 0}, 0, a2), DomainError);
}

}  // TEST_SUITE
