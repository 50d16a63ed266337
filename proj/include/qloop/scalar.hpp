#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "qloop/laurent.hpp"

namespace qloop {

/// Exact rational function in v over the integers.
///
/// Canonical form: num/den with gcd(num, den) = 1 including integer content,
/// den an ordinary polynomial (min_exp 0, so den(0) != 0) with positive
/// leading coefficient.  The numerator may be a genuine Laurent polynomial.
/// Equality of canonical forms is equality of rational functions.
class Scalar {
public:
  Scalar() = default;  // zero
  Scalar(long c) : num_(c) {}
  explicit Scalar(BigInt c) : num_(std::move(c)) {}
  explicit Scalar(Laurent num) : num_(std::move(num)) {}
  /// num/den; throws DivisionByZero if den is zero.
  Scalar(Laurent num, Laurent den);

  static Scalar v(int exp = 1) { return Scalar(Laurent::v(exp)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DivisionByZero if o is zero.
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  bool operator==(const Scalar& o) const = default;

  /// The bar involution v -> v^{-1}.
  Scalar bar() const;
  /// v -> v^r (node-local scalars).  r >= 1.
  Scalar stretched(int r) const;

  /// Order of vanishing at v = 0; nullopt encodes +infinity (the zero scalar).
  std::optional<long> val0() const;
  /// Member of the local ring A = { val0 >= 0 }.
  bool in_A() const;
  /// Value at v = 0 as an exact rational.  Precondition: in_A().
  mpq_class residue_at_zero() const;

  /// Canonical text form: "num" when den = 1, else "(num)/(den)".
  std::string str() const;

private:
  Laurent num_;
  Laurent den_ = Laurent(1);
  void canonicalize();
};

/// Quantum integer [l] = (v^{-l} - v^l)/(v^{-1} - v); [0] = 0, [-l] = -[l].
Laurent qint_laurent(long l);
Scalar qint(long l);
/// [l]! for l >= 0.
Scalar qfact(long l);
/// Quantum binomial [r over k]: [r]!/([k]![r-k]!) for 0 <= k <= r, else 0.
Scalar qbinom(long r, long k);

/// Node-local variants: the same in the variable v_i = v^r.
Scalar qint_node(long l, int r);
Scalar qfact_node(long l, int r);
Scalar qbinom_node(long n, long k, int r);

}  // namespace qloop
