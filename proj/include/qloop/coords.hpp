#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qloop/pairing.hpp"
#include "qloop/symfunc.hpp"

namespace qloop {

/// Canonical window coordinates.
///
/// Rank 1: exact PBW coordinates.  Elements are straightened to the basis
/// E^{(s_1)}_{n_1} ... E^{(s_k)}_{n_k} * b(1,lambda) with n_1 > ... > n_k; a
/// label Word lists the E letters with repetition plus Schur letters, and the
/// divided-power factorials [s]_{v_i}! are folded into the coordinate values
/// (so a coordinate of v-valuation 0 really is a unit multiple of a
/// divided-power basis vector).
///
/// Rank >= 2: coordinates with respect to a per-weight basis of mixed window
/// monomials chosen greedily by Gram rank, solved exactly against that Gram.
/// These coordinates separate windowed classes (two elements get equal
/// coordinates exactly when the window pairing cannot tell them apart).
class Coordinatizer {
 public:
  explicit Coordinatizer(PairingContext ctx);

  const PairingContext& ctx() const { return ctx_; }
  PairingEngine& engine() { return engine_; }

  std::map<Word, Scalar> coords(const Element& x);

  /// The element a label stands for (divided powers carry 1/[s]! here).
  Element element_of_label(const Word& label) const;
  Element from_coords(const std::map<Word, Scalar>& c) const;

 private:
  PairingContext ctx_;
  PairingEngine engine_;
  std::map<Weight, std::vector<Word>> basis_cache_;
  std::map<Weight, ScalarMatrix> gram_cache_;

  std::map<Word, Scalar> rank1_coords(const Element& x);
  std::map<Word, Scalar> general_coords(const Element& x);
  const std::vector<Word>& weight_basis(const Weight& alpha);
};

/// Deterministic reduction against the span of a family of elements, with
/// representative bookkeeping: reduce(x) returns x minus a combination of the
/// family, canonical in the sense that its pairing functionals vanish at the
/// elimination pivots.  Reduction is idempotent; the family order and the
/// test-monomial order fix the result.
class SpanReducer {
 public:
  SpanReducer(const std::vector<Element>& span, std::vector<Word> tests, PairingEngine& engine);

  Element reduce(const Element& x);
  size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::vector<Scalar> vec;
    Element rep;
    size_t pivot = 0;
  };
  std::vector<Row> rows_;
  std::vector<Word> tests_;
  PairingEngine* engine_;

  std::vector<Scalar> functionals(const Element& x);
};

/// One generator of an A-lattice in triangular position.
struct LatticeRow {
  std::map<Word, Scalar> coords;
  Element rep;
  std::string provenance;
  Word pivot_label;
  long pivot_val = 0;  // after triangularization the pivot entry is v^pivot_val

  bool coords_in_A() const;
};

/// Exact Gaussian elimination over the local ring A = {no pole at v = 0}:
/// pivots of minimal v-valuation, rows rescaled only by units of A, later
/// rows reduced by quotients that stay in A.  The A-span of the input rows is
/// preserved exactly; the result is triangular (each row vanishes at all
/// earlier pivot labels).
std::vector<LatticeRow> dvr_triangularize(std::vector<LatticeRow> rows);

struct DvrSolve {
  bool in_span = false;             // x lies in the rational span of the rows
  bool in_A = false;                // ... with all coefficients in A
  std::vector<Scalar> coeffs;       // x = sum coeffs[j] * rows[j] when in_span
  std::map<Word, Scalar> residual;  // what is left when not in span
};

/// Forward triangular solve of x against triangularized rows.
DvrSolve dvr_solve(const std::vector<LatticeRow>& rows, std::map<Word, Scalar> x);

}  // namespace qloop
