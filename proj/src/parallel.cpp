#include "qloop/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qloop {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

ScalarMatrix gram_serial(const std::vector<Element>& rows, const std::vector<Element>& cols,
                         const CartanData& cartan) {
  PairingEngine engine(cartan);
  ScalarMatrix out(rows.size(), std::vector<Scalar>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out[i][j] = engine.pair(rows[i], cols[j]);
  return out;
}

ScalarMatrix gram_parallel(const std::vector<Element>& rows, const std::vector<Element>& cols,
                           const CartanData& cartan) {
  const size_t n = rows.size(), m = cols.size();
  ScalarMatrix out(n, std::vector<Scalar>(m));
#ifdef _OPENMP
  // Row-sliced: each thread owns whole rows so a memoizing engine sees the
  // coherent stream of one row's splittings.
#pragma omp parallel
  {
    PairingEngine engine(cartan);
#pragma omp for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i)
      for (size_t j = 0; j < m; ++j) out[static_cast<size_t>(i)][j] = engine.pair(rows[static_cast<size_t>(i)], cols[j]);
  }
#else
  out = gram_serial(rows, cols, cartan);
#endif
  return out;
}

ScalarMatrix gram(const std::vector<Element>& rows, const std::vector<Element>& cols,
                  const CartanData& cartan, ExecPolicy policy) {
  return policy == ExecPolicy::Parallel ? gram_parallel(rows, cols, cartan)
                                        : gram_serial(rows, cols, cartan);
}

std::vector<Scalar> pair_batch(const Element& x, const std::vector<Word>& tests,
                               const CartanData& cartan, ExecPolicy policy) {
  std::vector<Scalar> out(tests.size());
  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      PairingEngine engine(cartan);
#pragma omp for schedule(dynamic)
      for (long j = 0; j < static_cast<long>(tests.size()); ++j)
        out[static_cast<size_t>(j)] = engine.pair(x, Element::from_word(tests[static_cast<size_t>(j)]));
    }
    return out;
#endif
  }
  PairingEngine engine(cartan);
  for (size_t j = 0; j < tests.size(); ++j)
    out[j] = engine.pair(x, Element::from_word(tests[j]));
  return out;
}

void for_each_index(size_t n, const std::function<void(size_t)>& fn, ExecPolicy policy) {
  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) fn(static_cast<size_t>(i));
    return;
#endif
  }
  for (size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace qloop
