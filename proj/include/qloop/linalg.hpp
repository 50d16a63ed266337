#pragma once

#include <optional>
#include <vector>

#include "qloop/scalar.hpp"

namespace qloop {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Gaussian elimination over the scalar field.  Pivots prefer entries of
/// minimal val0 (lowest valuation at v = 0) so that A-integrality of the
/// inputs stays visible in the reduced data; ties break deterministically
/// on the lowest row index.
int matrix_rank(ScalarMatrix m);

struct SolveResult {
  bool consistent = false;
  std::vector<Scalar> solution;  // free variables pinned to zero
  int rank = 0;
};

/// Solves a x = b; `solution` is meaningful only when `consistent`.
SolveResult solve_system(ScalarMatrix a, std::vector<Scalar> b);

/// Row-reduces `rows` to a reduced echelon basis of their span (zero rows
/// dropped), with the same deterministic pivoting.  Column order is the
/// coordinate order; used for span membership and canonical reductions.
struct EchelonBasis {
  ScalarMatrix rows;            // reduced, pivot entries 1
  std::vector<int> pivot_cols;  // one per row, strictly increasing
};

EchelonBasis echelon_basis(ScalarMatrix rows);

/// Reduces x modulo the span described by an EchelonBasis; the result has a
/// zero entry in every pivot column, and is zero iff x lies in the span.
std::vector<Scalar> reduce_against(const EchelonBasis& basis, std::vector<Scalar> x);

}  // namespace qloop
