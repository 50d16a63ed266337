#include "qloop/element.hpp"

#include <algorithm>
#include <sstream>

#include "qloop/error.hpp"

namespace qloop {

Letter Letter::e(int node, int degree) {
  if (node < 1) throw DomainError("node index must be >= 1");
  return Letter{LetterKind::E, node, degree, {}};
}

namespace {

Letter sym_letter(LetterKind k, int node, int degree) {
  if (node < 1) throw DomainError("node index must be >= 1");
  if (degree < 1) throw DomainError("symmetric-part letter degree must be >= 1");
  return Letter{k, node, degree, {}};
}

}  // namespace

Letter Letter::h(int node, int degree) { return sym_letter(LetterKind::H, node, degree); }
Letter Letter::xi(int node, int degree) { return sym_letter(LetterKind::Xi, node, degree); }
Letter Letter::chi(int node, int degree) { return sym_letter(LetterKind::Chi, node, degree); }
Letter Letter::theta(int node, int degree) { return sym_letter(LetterKind::Theta, node, degree); }

Letter Letter::schur_b(int node, Partition lambda) {
  if (node < 1) throw DomainError("node index must be >= 1");
  if (!is_partition(lambda) || lambda.empty())
    throw DomainError("Schur letter needs a nonempty partition");
  int w = partition_weight(lambda);
  return Letter{LetterKind::SchurB, node, w, std::move(lambda)};
}

std::string Letter::str() const {
  std::ostringstream os;
  switch (kind) {
    case LetterKind::E: os << "E"; break;
    case LetterKind::H: os << "H"; break;
    case LetterKind::Xi: os << "xi"; break;
    case LetterKind::Chi: os << "chi"; break;
    case LetterKind::Theta: os << "theta"; break;
    case LetterKind::SchurB: os << "b"; break;
  }
  os << "(" << node << ",";
  if (kind == LetterKind::SchurB) {
    os << partition_str(parts);
  } else {
    os << degree;
  }
  os << ")";
  return os.str();
}

Word canonical_word(Word w) {
  auto run_begin = w.begin();
  while (run_begin != w.end()) {
    if (run_begin->is_e()) {
      ++run_begin;
      continue;
    }
    auto run_end = run_begin;
    while (run_end != w.end() && run_end->is_htype()) ++run_end;
    std::sort(run_begin, run_end);
    run_begin = run_end;
  }
  return w;
}

bool is_canonical_word(const Word& w) { return w == canonical_word(w); }

Weight weight_of(const Word& w, int rank) {
  Weight acc = Weight::zero(rank);
  for (const Letter& l : w) {
    if (l.node > rank) throw DomainError("letter node exceeds Cartan rank: " + l.str());
    if (l.is_e()) acc.q[l.node - 1] += 1;
    acc.d += l.degree;
  }
  return acc;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w) s += l.str();
  return s;
}

Element Element::one() {
  Element r;
  r.t_[Word{}] = Scalar(1);
  return r;
}

Element Element::from_letter(const Letter& l) {
  Element r;
  r.t_[Word{l}] = Scalar(1);
  return r;
}

Element Element::from_word(Word w) {
  Element r;
  r.t_[canonical_word(std::move(w))] = Scalar(1);
  return r;
}

bool Element::is_one() const {
  return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second.is_one();
}

Scalar Element::coeff(const Word& w) const {
  auto it = t_.find(canonical_word(w));
  return it == t_.end() ? Scalar() : it->second;
}

void Element::add_term(Word w, const Scalar& c) {
  if (c.is_zero()) return;
  Word cw = canonical_word(std::move(w));
  auto it = t_.find(cw);
  if (it == t_.end()) {
    t_.emplace(std::move(cw), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [w, c] : t_) c *= s;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.t_) {
    for (const auto& [wb, cb] : b.t_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(std::move(w), ca * cb);
    }
  }
  return out;
}

Weight Element::weight(int rank) const {
  if (t_.empty()) throw DomainError("weight of the zero element");
  Weight w0 = weight_of(t_.begin()->first, rank);
  for (const auto& [w, c] : t_)
    if (weight_of(w, rank) != w0) throw DomainError("element is not weight-homogeneous");
  return w0;
}

bool Element::is_weight_homogeneous(int rank) const {
  if (t_.empty()) return true;
  Weight w0 = weight_of(t_.begin()->first, rank);
  for (const auto& [w, c] : t_)
    if (weight_of(w, rank) != w0) return false;
  return true;
}

std::map<Weight, Element> Element::split_by_weight(int rank) const {
  std::map<Weight, Element> out;
  for (const auto& [w, c] : t_) out[weight_of(w, rank)].add_term(w, c);
  return out;
}

std::string Element::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    Scalar coeff = c;
    bool neg = false;
    // Pull the minus out when the printed coefficient would open with one
    // (the numerator's lowest-degree term is negative).
    if (coeff.den().is_one() && coeff.num().coeff(coeff.num().min_exp()) < 0) {
      neg = true;
      coeff = -coeff;
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (coeff.is_one()) {
      os << word_str(w);
    } else if (w.empty()) {
      os << (coeff.den().is_one() ? "(" + coeff.str() + ")" : coeff.str());
    } else {
      os << (coeff.den().is_one() ? "(" + coeff.str() + ")" : coeff.str());
      os << " * " << word_str(w);
    }
  }
  return os.str();
}

TensorElement TensorElement::one() {
  TensorElement r;
  r.t_[{Word{}, Word{}}] = Scalar(1);
  return r;
}

TensorElement TensorElement::pure(Word left, Word right, const Scalar& c) {
  TensorElement r;
  r.add_term(std::move(left), std::move(right), c);
  return r;
}

void TensorElement::add_term(Word left, Word right, const Scalar& c) {
  if (c.is_zero()) return;
  std::pair<Word, Word> key{canonical_word(std::move(left)), canonical_word(std::move(right))};
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [k, c] : t_) c *= s;
  return *this;
}

std::string TensorElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << (c.den().is_one() ? "(" + c.str() + ")" : c.str()) << " * ";
    os << word_str(k.first) << " (x) " << word_str(k.second);
  }
  return os.str();
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b,
                              const CartanData& cartan) {
  int rank = cartan.rank();
  TensorElement out;
  for (const auto& [ka, ca] : a.terms()) {
    Weight wa2 = weight_of(ka.second, rank);
    for (const auto& [kb, cb] : b.terms()) {
      Weight wb1 = weight_of(kb.first, rank);
      long twist = -cartan.bilinear(wa2, wb1);
      Word left = ka.first;
      left.insert(left.end(), kb.first.begin(), kb.first.end());
      Word right = ka.second;
      right.insert(right.end(), kb.second.begin(), kb.second.end());
      out.add_term(std::move(left), std::move(right),
                   ca * cb * Scalar::v(static_cast<int>(twist)));
    }
  }
  return out;
}

Element expand_sym_letters(const Element& x) {
  Element out;
  for (const auto& [w, c] : x.terms()) {
    Element acc = Element::one() * c;
    for (const Letter& l : w) {
      if (l.kind == LetterKind::E || l.kind == LetterKind::H) {
        Element single = Element::from_letter(l);
        acc = acc * single;
        continue;
      }
      const SymElement* sym = nullptr;
      SymElement tmp;
      switch (l.kind) {
        case LetterKind::Xi: sym = &xi_coeff(l.degree); break;
        case LetterKind::Chi: sym = &chi_coeff(l.degree); break;
        case LetterKind::Theta: sym = &theta_coeff(l.degree); break;
        case LetterKind::SchurB:
          tmp = schur(l.parts);
          sym = &tmp;
          break;
        default: break;
      }
      Element expanded;
      for (const auto& [lam, sc] : sym->terms()) {
        Word pw;
        for (int part : lam) pw.push_back(Letter::h(l.node, part));
        expanded.add_term(std::move(pw), sc);
      }
      acc = acc * expanded;
    }
    out += acc;
  }
  return out;
}

}  // namespace qloop
