#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qloop/cartan.hpp"
#include "qloop/element.hpp"
#include "qloop/linalg.hpp"

namespace qloop {

/// Cartan datum plus the inclusive loop-degree window used by every
/// enumeration of E-monomials.
struct PairingContext {
  CartanData cartan;
  Window window;
};

/// Exact Hopf pairing.  Values are computed by peeling letters of the right
/// word through the twisted coproduct; no window truncation is involved, so
/// results are exact rational functions.  Word pairs are memoized, which
/// makes an engine cheap to reuse but not thread-safe; concurrent code uses
/// one engine per thread.
class PairingEngine {
public:
  explicit PairingEngine(CartanData cartan) : cartan_(std::move(cartan)) {}

  const CartanData& cartan() const { return cartan_; }

  Scalar pair(const Element& x, const Element& y);
  Scalar pair_words(const Word& a, const Word& b);

  /// F'_{i,n}(x) = sum (v^{-2}-1) (E_{i,n}, x_(1)) x_(2); exact, defined on
  /// E-letter elements (H content is rejected after normal ordering).
  Element fprime(int node, int n, const Element& x);

  size_t cache_size() const { return cache_.size(); }

private:
  CartanData cartan_;
  std::map<std::pair<Word, Word>, Scalar> cache_;

  Scalar pair_words_uncached(const Word& a, const Word& b);
  Scalar single_vs_word(const Letter& l, const Word& b);
  Scalar split_pair(const Word& a, const Word& b);
};

/// Pairing of two single letters (the base cases of the recursion).
Scalar base_pair(const Letter& a, const Letter& b, const CartanData& cartan);

/// Coefficient of the empty monomial.
Scalar counit(const Element& x);

/// Window-truncated twisted coproduct: E-letters split as
/// E (x) 1 + sum_t theta_t (x) E_{n-t} with n - t >= dmin; H is primitive;
/// Xi/Chi/Theta split group-like; Schur letters are expanded first.
TensorElement coproduct(const Element& x, const CartanData& cartan, const Window& window);

/// All window E-monomials of weight alpha (every interleaving of per-node
/// degree multisets drawn from the window).  For alpha with zero Q-part the
/// family is the power-sum H-monomials of loop degree alpha.d instead, whose
/// Gram form is diagonal and invertible.
std::vector<Word> weight_monomials(const Weight& alpha, const PairingContext& ctx);

/// Window monomials of weight alpha with mixed E and H content: every
/// E-monomial of weight (alpha.q, alpha.d - e) followed by every H-monomial
/// of loop degree e >= 0.  For alpha.q = 0 this coincides with
/// weight_monomials.  Spans the full weight space of the positive half at
/// window scale, which the pure-E family does not once H letters appear.
std::vector<Word> weight_monomials_mixed(const Weight& alpha, const PairingContext& ctx);

enum class ZeroVerdict { Nonzero, PresumedZero };

struct ZeroTestResult {
  ZeroVerdict verdict = ZeroVerdict::PresumedZero;
  Word witness;   // a monomial with nonzero pairing, when verdict == Nonzero
  Scalar value;   // its pairing value
};

/// Pairs x against every weight monomial of the window; Nonzero is a proof,
/// PresumedZero is exhaustion of the window family.
ZeroTestResult is_zero_windowed(const Element& x, const PairingContext& ctx,
                                PairingEngine* engine = nullptr);

struct ZDecomposition {
  Element w;  // combination of E_{i,m} u with m <= k
  Element z;  // x - w, orthogonal to the windowed W-span
};

/// Splits weight-homogeneous x (E letters only) against
/// W'_{i,k} = sum_{m <= k} E_{i,m} U by an exact Gram projection over the
/// window family.  k below dmin yields an empty span (w = 0).  Throws
/// WindowError when the windowed system is inconsistent.
ZDecomposition decompose_Z(int node, int k, const Element& x, const PairingContext& ctx,
                           PairingEngine& engine);

}  // namespace qloop
