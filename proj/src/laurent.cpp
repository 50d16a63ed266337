#include "qloop/laurent.hpp"

#include <sstream>
#include <utility>

#include "qloop/error.hpp"

namespace qloop {

Laurent::Laurent(long c) {
  if (c != 0) t_[0] = BigInt(c);
}

Laurent::Laurent(BigInt c) {
  if (c != 0) t_[0] = std::move(c);
}

Laurent Laurent::v(int exp) {
  Laurent r;
  r.t_[exp] = 1;
  return r;
}

Laurent Laurent::term(BigInt coeff, int exp) {
  Laurent r;
  if (coeff != 0) r.t_[exp] = std::move(coeff);
  return r;
}

bool Laurent::is_one() const {
  return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1;
}

int Laurent::min_exp() const {
  if (t_.empty()) throw DomainError("min_exp of zero polynomial");
  return t_.begin()->first;
}

int Laurent::max_exp() const {
  if (t_.empty()) throw DomainError("max_exp of zero polynomial");
  return t_.rbegin()->first;
}

BigInt Laurent::coeff(int exp) const {
  auto it = t_.find(exp);
  return it == t_.end() ? BigInt(0) : it->second;
}

const BigInt& Laurent::leading_coeff() const {
  if (t_.empty()) throw DomainError("leading_coeff of zero polynomial");
  return t_.rbegin()->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      int e = ea + eb;
      auto it = r.t_.find(e);
      if (it == r.t_.end()) {
        BigInt p = ca * cb;
        if (p != 0) r.t_.emplace(e, std::move(p));
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.t_.erase(it);
      }
    }
  }
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

Laurent Laurent::shifted(int k) const {
  if (k == 0) return *this;
  Laurent r;
  for (const auto& [e, c] : t_) r.t_[e + k] = c;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : t_) r.t_[-e] = c;
  return r;
}

Laurent Laurent::stretched(int r) const {
  if (r < 1) throw DomainError("stretch factor must be >= 1");
  Laurent out;
  for (const auto& [e, c] : t_) out.t_[e * r] = c;
  return out;
}

BigInt Laurent::content() const {
  if (t_.empty()) throw DomainError("content of zero polynomial");
  BigInt g = 0;
  for (const auto& [e, c] : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    BigInt a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

Laurent div_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw DomainError("exact division by zero polynomial");
  if (a.is_zero()) return Laurent();
  // Reduce to ordinary polynomials: pull off the v-power of each operand.
  int sa = a.min_exp(), sb = b.min_exp();
  Laurent num = a.shifted(-sa), den = b.shifted(-sb);
  Laurent q;
  while (!num.is_zero()) {
    int d = num.max_exp() - den.max_exp();
    if (d < 0) throw DomainError("inexact polynomial division");
    BigInt qc, rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), num.leading_coeff().get_mpz_t(),
                den.leading_coeff().get_mpz_t());
    if (rem != 0) throw DomainError("inexact polynomial division");
    Laurent t = Laurent::term(qc, d);
    q += t;
    num -= t * den;
    if (!num.is_zero() && num.max_exp() - den.max_exp() > d)
      throw DomainError("inexact polynomial division");
  }
  return q.shifted(sa - sb);
}

namespace {

// Remainder of a by b up to a scalar factor (incremental pseudo-division;
// both nonzero, min_exp 0).
Laurent pseudo_rem(Laurent a, const Laurent& b) {
  int db = b.max_exp();
  while (!a.is_zero() && a.max_exp() >= db) {
    int d = a.max_exp() - db;
    BigInt ca = a.leading_coeff();
    a = a * Laurent(b.leading_coeff()) - Laurent::term(ca, d) * b;
  }
  return a;
}

}  // namespace

Laurent poly_gcd(Laurent a, Laurent b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("poly_gcd of zero polynomial");
  BigInt ca = a.content(), cb = b.content();
  BigInt c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = div_exact(a, Laurent(ca));
  b = div_exact(b, Laurent(cb));
  // Primitive polynomial remainder sequence.
  if (a.max_exp() < b.max_exp()) std::swap(a, b);
  while (!b.is_zero()) {
    Laurent r = pseudo_rem(a, b);
    if (!r.is_zero()) {
      // Strip any v-power (coprime to the const-term-nonzero inputs) and
      // the content to keep coefficients small.
      r = r.shifted(-r.min_exp());
      r = div_exact(r, Laurent(r.content()));
    }
    a = b;
    b = r;
  }
  Laurent g = a * Laurent(c);
  if (g.leading_coeff() < 0) g = -g;
  return g;
}

}  // namespace qloop
