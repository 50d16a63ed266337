#pragma once

#include <map>
#include <string>
#include <vector>

#include "qloop/scalar.hpp"

namespace qloop {

/// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
/// Sum of parts.
int partition_weight(const Partition& p);
/// All partitions of d >= 0 in lexicographically decreasing order.
const std::vector<Partition>& partitions_of(int d);
/// "[3,1,1]" ("[]" for the empty partition).
std::string partition_str(const Partition& p);

/// Element of the ring of symmetric functions over the scalar field,
/// expressed in the power-sum basis { p_lambda }.
class SymElement {
public:
  SymElement() = default;
  static SymElement one();
  static SymElement p(int s);
  static SymElement p(const Partition& lambda);

  bool is_zero() const { return c_.empty(); }
  Scalar coeff(const Partition& lambda) const;
  const std::map<Partition, Scalar>& terms() const { return c_; }

  SymElement& operator+=(const SymElement& o);
  SymElement& operator-=(const SymElement& o);
  SymElement& operator*=(const SymElement& o);
  SymElement& operator*=(const Scalar& s);
  friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
  friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
  friend SymElement operator*(SymElement a, const SymElement& b) { return a *= b; }
  friend SymElement operator*(SymElement a, const Scalar& s) { return a *= s; }

  bool operator==(const SymElement& o) const = default;

  void add_term(const Partition& lambda, const Scalar& s);

private:
  std::map<Partition, Scalar> c_;  // nonzero coefficients only
};

/// Degree-s coefficient of xi(z) = exp(sum_s p_s z^s / [s]).
const SymElement& xi_coeff(int s);
/// Degree-s coefficient of chi(z) = exp(-sum_s p_s z^s / [s]).
const SymElement& chi_coeff(int s);
/// Degree-s coefficient of theta(z) = exp((v^{-1} - v) sum_s p_s z^s).
const SymElement& theta_coeff(int s);

/// Jacobi-Trudi determinant det(xi_{lambda_i - i + j}).
SymElement schur(const Partition& lambda);

/// Hopf pairing of the one-node symmetric function algebra:
/// (p_m, p_n) = delta_{m,n} [2m]/(m(v^{-1}-v)), extended so that
/// (p_lambda, p_lambda) carries k! per part-multiplicity k.
Scalar pair_sym(const SymElement& a, const SymElement& b);

/// Coordinates of x in the multiplicative xi basis { prod_i xi_{lambda_i} }.
std::map<Partition, Scalar> to_xi_basis(const SymElement& x);
/// The xi-monomial prod_i xi_{lambda_i} expanded in the p basis.
SymElement xi_monomial(const Partition& lambda);
/// Coordinates of x in the Schur basis { schur(lambda) }.
std::map<Partition, Scalar> to_schur_basis(const SymElement& x);

/// Image of x under the bar involution that fixes every xi_s and conjugates
/// scalars (v -> v^{-1}), expressed back in the p basis.
SymElement bar_sym(const SymElement& x);

}  // namespace qloop
