#include "qloop/barcomp.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "qloop/error.hpp"
#include "qloop/normal_order.hpp"

namespace qloop {

std::optional<mpq_class> slope(const Weight& alpha) {
  long qsum = alpha.qsum();
  if (qsum == 0) return std::nullopt;
  mpq_class m(alpha.d, qsum);
  m.canonicalize();
  return m;
}

std::vector<Element> w_filtration_span(const Weight& alpha, const mpq_class& m,
                                       const PairingContext& ctx) {
  const int rank = ctx.cartan.rank();
  if (static_cast<int>(alpha.q.size()) != rank) throw DomainError("weight rank mismatch");
  std::set<Word> words;

  std::vector<int> qb(rank, 0);
  std::function<void(int)> sweep = [&](int node) {
    if (node == rank) {
      long qsum = 0, rem_qsum = 0;
      for (int i = 0; i < rank; ++i) {
        qsum += qb[i];
        rem_qsum += alpha.q[i] - qb[i];
      }
      if (qsum == 0) return;  // mu = +infinity never passes the cutoff
      long lo = qsum * ctx.window.dmin;
      long hi = alpha.d - rem_qsum * ctx.window.dmin;
      for (long d = lo; d <= hi; ++d) {
        if (mpq_class(d) > m * mpq_class(qsum)) continue;  // mu(beta) <= m, exact
        Weight beta{qb, d};
        std::vector<int> qr(rank);
        for (int i = 0; i < rank; ++i) qr[i] = alpha.q[i] - qb[i];
        Weight rest{qr, alpha.d - d};
        const std::vector<Word> left = weight_monomials_mixed(beta, ctx);
        if (left.empty()) continue;
        const std::vector<Word> right = weight_monomials_mixed(rest, ctx);
        for (const Word& u : left)
          for (const Word& w : right) {
            Word prod = u;
            prod.insert(prod.end(), w.begin(), w.end());
            words.insert(canonical_word(prod));
          }
      }
      return;
    }
    for (int c = 0; c <= alpha.q[node]; ++c) {
      qb[node] = c;
      sweep(node + 1);
    }
    qb[node] = 0;
  };
  sweep(0);

  std::vector<Element> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(Element::from_word(w));
  return out;
}

std::string Jet::header(const Window& window) const {
  std::ostringstream os;
  os << "weight=" << weight.str() << " level=" << level.get_str() << " window=" << window.str();
  return os.str();
}

JetEngine::JetEngine(PairingContext ctx) : ctx_(std::move(ctx)), coord_(ctx_) {}

SpanReducer& JetEngine::reducer_for(const Weight& alpha, const mpq_class& m) {
  auto key = std::make_pair(alpha, m);
  auto it = reducers_.find(key);
  if (it == reducers_.end()) {
    std::vector<Element> span = w_filtration_span(alpha, m, ctx_);
    std::vector<Word> tests = weight_monomials_mixed(alpha, ctx_);
    it = reducers_
             .emplace(key, std::make_unique<SpanReducer>(span, std::move(tests), coord_.engine()))
             .first;
  }
  return *it->second;
}

Jet JetEngine::jet(const Element& x, const mpq_class& m) {
  if (x.is_zero()) return Jet{Weight::zero(ctx_.cartan.rank()), m, x};
  Weight alpha = x.weight(ctx_.cartan.rank());
  // Reduce modulo the filtration span, then take the canonical coordinate
  // representative so algebra-equal inputs yield literally equal jets.
  Element reduced = reducer_for(alpha, m).reduce(x);
  return Jet{alpha, m, coord_.from_coords(coord_.coords(reduced))};
}

Element JetEngine::r_m(const Element& x, const mpq_class& m) { return x - jet(x, m).value; }

Jet JetEngine::multiply(const Jet& a, const Jet& b, const mpq_class& n) {
  if (a.level > n)
    throw DomainError("left jet level " + a.level.get_str() + " exceeds the product level " +
                      n.get_str() + "; recompute the left factor at level <= " + n.get_str());
  mpq_class need = n - mpq_class(a.weight.qsum());
  if (b.level > need)
    throw DomainError("right jet level " + b.level.get_str() +
                      " is too shallow for the product level " + n.get_str() +
                      "; recompute the right factor at level <= " + need.get_str());
  return jet(a.value * b.value, n);
}

Element bar_generator(int node, int l, const PairingContext& ctx, int margin) {
  Element out = Element::from_letter(Letter::e(node, l));
  const long max_total = static_cast<long>(l) - (ctx.window.dmin - margin);
  std::vector<int> comp;
  long sum = 0;
  std::function<void()> rec = [&]() {
    if (!comp.empty()) {
      const long lt = comp.back();
      const long prefix = sum - lt;
      Scalar coeff = (Scalar::v(-lt) - Scalar::v(lt)) * Scalar::v(-prefix);
      if (comp.size() % 2) coeff = -coeff;
      Word w;
      w.push_back(Letter::e(node, static_cast<int>(l - sum)));
      for (int lj : comp) w.push_back(Letter::xi(node, lj));
      out.add_term(canonical_word(w), coeff);
    }
    for (int next = 1; sum + next <= max_total; ++next) {
      comp.push_back(next);
      sum += next;
      rec();
      sum -= next;
      comp.pop_back();
    }
  };
  rec();
  return out;
}

namespace {

SymElement sym_of_letter(const Letter& l) {
  switch (l.kind) {
    case LetterKind::H:
      return SymElement::p(l.degree);
    case LetterKind::Xi:
      return xi_coeff(l.degree);
    case LetterKind::Chi:
      return chi_coeff(l.degree);
    case LetterKind::Theta:
      return theta_coeff(l.degree);
    case LetterKind::SchurB:
      return schur(l.parts);
    default:
      throw DomainError("not an H-type letter");
  }
}

Element as_h_words(int node, const SymElement& sym) {
  Element out;
  for (const auto& [mu, c] : sym.terms()) {
    Word w;
    for (int part : mu) w.push_back(Letter::h(node, part));
    out.add_term(canonical_word(w), c);
  }
  return out;
}

}  // namespace

Element bar_element(const Element& x, const PairingContext& ctx, int margin) {
  Element total;
  for (const auto& [w, c] : x.terms()) {
    Element prod = Element::one();
    for (const Letter& l : w) {
      if (l.is_e())
        prod = prod * bar_generator(l.node, l.degree, ctx, margin);
      else
        prod = prod * as_h_words(l.node, bar_sym(sym_of_letter(l)));
    }
    total = total + prod * c.bar();
  }
  const Element ordered = normal_order_H(total, ctx.cartan);
  Element proj;
  for (const auto& [w, c] : ordered.terms()) {
    bool keep = true;
    for (const Letter& l : w)
      if (l.is_e() && l.degree < ctx.window.dmin) {
        keep = false;
        break;
      }
    if (keep) proj.add_term(w, c);
  }
  return proj;
}

}  // namespace qloop
