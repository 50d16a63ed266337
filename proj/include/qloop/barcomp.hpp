#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qloop/coords.hpp"

namespace qloop {

/// mu(alpha) = d / |alpha_0|; weights with zero Q-part get +infinity
/// (nullopt), so pure-H weights never enter a filtration cutoff.
std::optional<mpq_class> slope(const Weight& alpha);

/// Spanning family of W_m[alpha]: all products u * w of mixed window
/// monomials with wt(u) = beta, mu(beta) <= m, 0 != beta <= alpha — the
/// defining sum taken verbatim, including beta = alpha.  Deterministic order.
std::vector<Element> w_filtration_span(const Weight& alpha, const mpq_class& m,
                                       const PairingContext& ctx);

/// Representative of the class of an element modulo W_m[alpha].  The value is
/// the canonical coordinate representative, so equal classes have literally
/// equal values regardless of the free words they arrived as.
struct Jet {
  Weight weight;
  mpq_class level = 0;
  Element value;

  std::string header(const Window& window) const;
};

/// Jets of the slope-filtration completion at window scale.  Reducers are
/// cached per (weight, level); all reductions are exact and deterministic.
class JetEngine {
 public:
  explicit JetEngine(PairingContext ctx);

  const PairingContext& ctx() const { return ctx_; }
  PairingEngine& engine() { return coord_.engine(); }

  Jet jet(const Element& x, const mpq_class& m);
  Element r_m(const Element& x, const mpq_class& m);

  /// Product at level n.  Requires a.level <= n and b.level <= n - |alpha_0(a)|
  /// (the padding that makes the class product well-defined); violating it is
  /// an error that names the required level.
  Jet multiply(const Jet& a, const Jet& b, const mpq_class& n);

 private:
  PairingContext ctx_;
  Coordinatizer coord_;
  std::map<std::pair<Weight, mpq_class>, std::unique_ptr<SpanReducer>> reducers_;

  SpanReducer& reducer_for(const Weight& alpha, const mpq_class& m);
};

/// Truncated bar image of one generator:
/// phi(E_{i,l}) = E_{i,l} + sum_{t>=1} (-1)^t sum_{l_1..l_t>0}
///   (v^{-l_t} - v^{l_t}) v^{-(l_1+..+l_{t-1})} E_{i,l-sum l_j} xi_{i,l_1}..xi_{i,l_t},
/// kept while l - sum l_j >= window.dmin - margin.
Element bar_generator(int node, int l, const PairingContext& ctx, int margin = 0);

/// Multiplicative semi-linear extension: coefficients are bar-conjugated,
/// E letters map through bar_generator computed with the given margin,
/// H-type letters through the xi-fixing bar of symmetric functions; the
/// product is normal-ordered and projected back to the window (words with an
/// E letter below dmin are dropped).
Element bar_element(const Element& x, const PairingContext& ctx, int margin = 2);

}  // namespace qloop
