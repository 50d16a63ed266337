#include "qloop/scalar.hpp"

#include <utility>

#include "qloop/error.hpp"

namespace qloop {

Scalar::Scalar(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  // Normalize the denominator to an ordinary polynomial with nonzero
  // constant term; the v-power moves into the Laurent numerator.
  int k = den_.min_exp();
  if (k != 0) {
    den_ = den_.shifted(-k);
    num_ = num_.shifted(-k);
  }
  if (!den_.is_one()) {
    int e = num_.min_exp();
    Laurent num0 = num_.shifted(-e);
    Laurent g = poly_gcd(num0, den_);
    if (!g.is_one()) {
      num0 = div_exact(num0, g);
      den_ = div_exact(den_, g);
    }
    num_ = num0.shifted(e);
  }
  if (den_.leading_coeff() < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::bar() const { return Scalar(num_.bar(), den_.bar()); }

Scalar Scalar::stretched(int r) const { return Scalar(num_.stretched(r), den_.stretched(r)); }

std::optional<long> Scalar::val0() const {
  if (num_.is_zero()) return std::nullopt;
  // den has min_exp 0 by canonical form.
  return num_.min_exp();
}

bool Scalar::in_A() const {
  auto v = val0();
  return !v || *v >= 0;
}

mpq_class Scalar::residue_at_zero() const {
  if (!in_A()) throw DomainError("residue of a scalar with a pole at v = 0");
  if (is_zero()) return mpq_class(0);
  mpq_class r(num_.coeff(0), den_.coeff(0));
  r.canonicalize();
  return r;
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  // Display normalization: slide the fraction so the denominator ends at its
  // constant term and opens with a positive coefficient, the shape quoted for
  // pairing denominators like v^-2 - 1.  The stored form is unchanged.
  int k = den_.max_exp();
  Laurent num = num_.shifted(-k);
  Laurent den = den_.shifted(-k);
  if (den.coeff(den.min_exp()) < 0) {
    num = -num;
    den = -den;
  }
  return "(" + num.str() + ")/(" + den.str() + ")";
}

Laurent qint_laurent(long l) {
  if (l == 0) return Laurent();
  if (l < 0) return -qint_laurent(-l);
  Laurent r;
  for (long j = 0; j < l; ++j) r += Laurent::v(static_cast<int>(l - 1 - 2 * j));
  return r;
}

Scalar qint(long l) { return Scalar(qint_laurent(l)); }

Scalar qfact(long l) {
  if (l < 0) throw DomainError("q-factorial of a negative integer");
  Laurent r(1);
  for (long j = 2; j <= l; ++j) r *= qint_laurent(j);
  return Scalar(r);
}

Scalar qbinom(long n, long k) {
  if (k < 0 || k > n) return Scalar();
  return qfact(n) / (qfact(k) * qfact(n - k));
}

Scalar qint_node(long l, int r) { return qint(l).stretched(r); }
Scalar qfact_node(long l, int r) { return qfact(l).stretched(r); }
Scalar qbinom_node(long n, long k, int r) { return qbinom(n, k).stretched(r); }

}  // namespace qloop
