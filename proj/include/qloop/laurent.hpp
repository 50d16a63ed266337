#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

namespace qloop {

using BigInt = mpz_class;

/// Integer-coefficient Laurent polynomial in the single variable v.
/// Stored sparsely as exponent -> coefficient with all coefficients nonzero.
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(long c);
  explicit Laurent(BigInt c);

  /// v^exp
  static Laurent v(int exp = 1);
  /// coeff * v^exp
  static Laurent term(BigInt coeff, int exp);

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;

  /// Smallest/largest exponent carrying a nonzero coefficient.
  /// Precondition: nonzero.
  int min_exp() const;
  int max_exp() const;

  /// Coefficient of v^exp (zero if absent).
  BigInt coeff(int exp) const;
  BigInt constant_term() const { return coeff(0); }
  /// Coefficient of v^max_exp.  Precondition: nonzero.
  const BigInt& leading_coeff() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;

  /// Multiplication by v^k.
  Laurent shifted(int k) const;
  /// The bar involution v -> v^{-1}.
  Laurent bar() const;
  /// Exponent stretch v -> v^r (for node-local q-integers).  r >= 1.
  Laurent stretched(int r) const;

  /// gcd of all coefficients, made positive.  Precondition: nonzero.
  BigInt content() const;

  bool operator==(const Laurent& o) const { return t_ == o.t_; }

  const std::map<int, BigInt>& terms() const { return t_; }

  /// Ascending-exponent text form, e.g. "v^-2 - 1" or "1 - v^2".
  std::string str() const;

private:
  std::map<int, BigInt> t_;
};

/// Exact quotient a / b in Z[v^{+-1}]; throws DomainError if b is zero or
/// does not divide a.
Laurent div_exact(const Laurent& a, const Laurent& b);

/// gcd over Z[v] of two nonzero polynomials with min_exp 0, including the
/// integer content; normalized to positive leading coefficient.
Laurent poly_gcd(Laurent a, Laurent b);

}  // namespace qloop
