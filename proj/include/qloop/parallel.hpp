#pragma once

#include <functional>
#include <vector>

#include "qloop/pairing.hpp"

namespace qloop {

/// Execution policy for the pairing-heavy kernels.  Serial is the reference
/// implementation; Parallel distributes work across OpenMP threads with one
/// memoizing PairingEngine per thread (engines are not thread-safe).
enum class ExecPolicy { Serial, Parallel };

int max_threads();

/// Gram matrix gram[i][j] = (rows[i], cols[j]).
ScalarMatrix gram_serial(const std::vector<Element>& rows, const std::vector<Element>& cols,
                         const CartanData& cartan);
ScalarMatrix gram_parallel(const std::vector<Element>& rows, const std::vector<Element>& cols,
                           const CartanData& cartan);
ScalarMatrix gram(const std::vector<Element>& rows, const std::vector<Element>& cols,
                  const CartanData& cartan, ExecPolicy policy);

/// out[j] = (x, tests[j]); batched form of the windowed zero test.
std::vector<Scalar> pair_batch(const Element& x, const std::vector<Word>& tests,
                               const CartanData& cartan, ExecPolicy policy);

/// Runs fn(0..n-1), each index exactly once, into caller-indexed slots.
/// Serial runs in order; Parallel uses a dynamic OpenMP schedule.  fn must
/// only write to state owned by its index.
void for_each_index(size_t n, const std::function<void(size_t)>& fn, ExecPolicy policy);

}  // namespace qloop
