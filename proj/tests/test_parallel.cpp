#include <vector>

#include "doctest.h"
#include "qloop/linalg.hpp"
#include "qloop/parallel.hpp"

using namespace qloop;

namespace {
const PairingContext kCtx{CartanData::sl2(), Window(-1, 2)};
}  // namespace

TEST_SUITE("parallel") {

TEST_CASE("thread count is sane") {
  CHECK(max_threads() >= 1);
}

TEST_CASE("parallel gram matches the serial reference") {
  std::vector<Word> words = weight_monomials(Weight({2}, 1), kCtx);
  REQUIRE(words.size() >= 2);
  std::vector<Element> fam;
  for (const Word& w : words) fam.push_back(Element::from_word(w));

  ScalarMatrix gs = gram_serial(fam, fam, kCtx.cartan);
  ScalarMatrix gp = gram_parallel(fam, fam, kCtx.cartan);
  REQUIRE(gs.size() == fam.size());
  REQUIRE(gp.size() == fam.size());
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = 0; j < fam.size(); ++j)
      CHECK(gs[i][j] == gp[i][j]);

  CHECK(matrix_rank(gs) == matrix_rank(gp));
  CHECK(gram(fam, fam, kCtx.cartan, ExecPolicy::Parallel) == gs);
}

TEST_CASE("batched pairings match individual calls") {
  std::vector<Word> tests = weight_monomials(Weight({2}, 1), kCtx);
  Element x = Element::from_word(tests[0]) + Scalar::v(2) * Element::from_word(tests[1]);

  PairingEngine engine(kCtx.cartan);
  for (ExecPolicy policy : {ExecPolicy::Serial, ExecPolicy::Parallel}) {
    std::vector<Scalar> out = pair_batch(x, tests, kCtx.cartan, policy);
    REQUIRE(out.size() == tests.size());
    for (size_t j = 0; j < tests.size(); ++j)
      CHECK(out[j] == engine.pair(x, Element::from_word(tests[j])));
  }
}

TEST_CASE("for_each_index visits every index exactly once") {
  const size_t n = 237;
  for (ExecPolicy policy : {ExecPolicy::Serial, ExecPolicy::Parallel}) {
    std::vector<int> hits(n, 0);
    for_each_index(n, [&](size_t i) { hits[i] += 1; }, policy);
    for (size_t i = 0; i < n; ++i) CHECK(hits[i] == 1);
  }
}

}  // TEST_SUITE
