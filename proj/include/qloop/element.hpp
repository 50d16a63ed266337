#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qloop/cartan.hpp"
#include "qloop/scalar.hpp"
#include "qloop/symfunc.hpp"

namespace qloop {

/// Generator alphabet.  E is the loop generator; H is a power sum of the
/// node's symmetric-function algebra; Xi, Chi, Theta are the series
/// coefficients; SchurB is the Schur-basis element b(i, lambda).
enum class LetterKind : int { E = 0, H = 1, Xi = 2, Chi = 3, Theta = 4, SchurB = 5 };

struct Letter {
  LetterKind kind = LetterKind::E;
  int node = 1;     // 1-based
  int degree = 0;   // l for E; s for H/Xi/Chi/Theta; |lambda| for SchurB
  Partition parts;  // SchurB only

  static Letter e(int node, int degree);
  static Letter h(int node, int degree);      // degree >= 1
  static Letter xi(int node, int degree);     // degree >= 1 (degree 0 is the unit)
  static Letter chi(int node, int degree);    // degree >= 1
  static Letter theta(int node, int degree);  // degree >= 1
  static Letter schur_b(int node, Partition lambda);  // nonempty partition

  bool is_e() const { return kind == LetterKind::E; }
  bool is_htype() const { return kind != LetterKind::E; }

  auto operator<=>(const Letter&) const = default;

  std::string str() const;
};

/// Free monomial.  Stored canonically: every maximal run of consecutive
/// H-type letters (which all commute with one another) is sorted.
using Word = std::vector<Letter>;

Word canonical_word(Word w);
bool is_canonical_word(const Word& w);
Weight weight_of(const Word& w, int rank);
std::string word_str(const Word& w);

/// Finitely supported scalar combination of free monomials.
class Element {
public:
  Element() = default;
  static Element one();
  static Element from_letter(const Letter& l);
  static Element from_word(Word w);

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  const std::map<Word, Scalar>& terms() const { return t_; }
  Scalar coeff(const Word& w) const;
  size_t term_count() const { return t_.size(); }

  /// Adds c * w, canonicalizing w first.
  void add_term(Word w, const Scalar& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend Element operator*(const Element& a, const Element& b);

  bool operator==(const Element& o) const = default;

  /// Common weight of all monomials; throws DomainError if mixed.
  Weight weight(int rank) const;
  bool is_weight_homogeneous(int rank) const;
  std::map<Weight, Element> split_by_weight(int rank) const;

  std::string str() const;

private:
  std::map<Word, Scalar> t_;
};

/// Element of the twisted tensor square, used by the coproduct.
class TensorElement {
public:
  TensorElement() = default;
  static TensorElement one();
  static TensorElement pure(Word left, Word right, const Scalar& c);

  bool is_zero() const { return t_.empty(); }
  const std::map<std::pair<Word, Word>, Scalar>& terms() const { return t_; }

  void add_term(Word left, Word right, const Scalar& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& s);
  bool operator==(const TensorElement& o) const = default;

  std::string str() const;

private:
  std::map<std::pair<Word, Word>, Scalar> t_;
};

/// Product in the twisted tensor square:
/// (x1 (x) x2)(y1 (x) y2) = v^{-(wt x2, wt y1)} x1 y1 (x) x2 y2,
/// the bilinear form acting on Q-parts.
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b,
                              const CartanData& cartan);

/// Rewrites every Xi/Chi/Theta/SchurB letter as its power-sum expansion,
/// leaving an element whose words use only E and H letters.
Element expand_sym_letters(const Element& x);

}  // namespace qloop
