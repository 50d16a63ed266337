#include "qloop/coords.hpp"

#include <algorithm>

#include "qloop/error.hpp"
#include "qloop/normal_order.hpp"

namespace qloop {

Coordinatizer::Coordinatizer(PairingContext ctx) : ctx_(std::move(ctx)), engine_(ctx_.cartan) {}

std::map<Word, Scalar> Coordinatizer::coords(const Element& x) {
  return ctx_.cartan.rank() == 1 ? rank1_coords(x) : general_coords(x);
}

std::map<Word, Scalar> Coordinatizer::rank1_coords(const Element& x) {
  const Element straightened = straighten_rank1(x, ctx_.cartan);
  std::map<Word, Scalar> out;
  for (const auto& [w, c] : straightened.terms()) {
    Word epart;
    size_t i = 0;
    while (i < w.size() && w[i].is_e()) epart.push_back(w[i++]);
    std::map<int, std::vector<int>> tail;
    for (; i < w.size(); ++i) {
      if (w[i].kind != LetterKind::H) throw DomainError("coordinates expect a normal-ordered H tail");
      tail[w[i].node].push_back(w[i].degree);
    }

    // Divided-power folding: a run E_n^s contributes [s]_{v_i}! to the
    // coordinate so the label stands for E^{(s)}_n.
    Scalar factor(1);
    for (size_t j = 0; j < epart.size();) {
      size_t k = j;
      while (k < epart.size() && epart[k].degree == epart[j].degree) ++k;
      factor = factor * qfact_node(static_cast<long>(k - j), ctx_.cartan.r(epart[j].node));
      j = k;
    }

    // H tail to the Schur basis, node by node.
    std::vector<std::pair<Word, Scalar>> tails{{Word{}, Scalar(1)}};
    for (auto& [node, degs] : tail) {
      std::sort(degs.begin(), degs.end(), std::greater<int>());
      const std::map<Partition, Scalar> schur = to_schur_basis(SymElement::p(Partition(degs.begin(), degs.end())));
      std::vector<std::pair<Word, Scalar>> next;
      for (const auto& [tw, tc] : tails)
        for (const auto& [lam, sc] : schur) {
          if (sc.is_zero()) continue;
          Word nw = tw;
          if (!lam.empty()) nw.push_back(Letter::schur_b(node, lam));
          next.emplace_back(std::move(nw), tc * sc);
        }
      tails = std::move(next);
    }

    for (const auto& [tw, tc] : tails) {
      Word label = epart;
      label.insert(label.end(), tw.begin(), tw.end());
      label = canonical_word(label);
      Scalar add = c * factor * tc;
      auto [it, inserted] = out.try_emplace(label, Scalar(0));
      it->second = it->second + add;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

const std::vector<Word>& Coordinatizer::weight_basis(const Weight& alpha) {
  auto cached = basis_cache_.find(alpha);
  if (cached != basis_cache_.end()) return cached->second;

  const std::vector<Word> family = weight_monomials_mixed(alpha, ctx_);
  std::vector<std::vector<Scalar>> ech;
  std::vector<size_t> pivots;
  std::vector<Word> chosen;
  for (const Word& cand : family) {
    std::vector<Scalar> row(family.size());
    for (size_t j = 0; j < family.size(); ++j) row[j] = engine_.pair_words(cand, family[j]);
    for (size_t r = 0; r < ech.size(); ++r) {
      Scalar f = row[pivots[r]];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < row.size(); ++j) row[j] = row[j] - f * ech[r][j];
    }
    size_t p = row.size();
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) {
        p = j;
        break;
      }
    if (p == row.size()) continue;
    Scalar inv = Scalar(1) / row[p];
    for (size_t j = 0; j < row.size(); ++j) row[j] = row[j] * inv;
    ech.push_back(std::move(row));
    pivots.push_back(p);
    chosen.push_back(cand);
  }

  ScalarMatrix g(chosen.size(), std::vector<Scalar>(chosen.size()));
  for (size_t a = 0; a < chosen.size(); ++a)
    for (size_t b = 0; b < chosen.size(); ++b) g[a][b] = engine_.pair_words(chosen[a], chosen[b]);
  gram_cache_[alpha] = std::move(g);
  return basis_cache_.emplace(alpha, std::move(chosen)).first->second;
}

std::map<Word, Scalar> Coordinatizer::general_coords(const Element& x) {
  std::map<Word, Scalar> out;
  for (const auto& [alpha, part] : x.split_by_weight(ctx_.cartan.rank())) {
    const std::vector<Word>& basis = weight_basis(alpha);
    if (basis.empty()) {
      if (is_zero_windowed(part, ctx_, &engine_).verdict != ZeroVerdict::PresumedZero)
        throw WindowError("weight " + alpha.str() + " carries content but has no window basis");
      continue;
    }
    std::vector<Scalar> rhs(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) rhs[j] = engine_.pair(Element::from_word(basis[j]), part);
    SolveResult res = solve_system(gram_cache_.at(alpha), rhs);
    if (!res.consistent) throw WindowError("windowed coordinate system inconsistent at " + alpha.str());
    for (size_t j = 0; j < basis.size(); ++j)
      if (!res.solution[j].is_zero()) out[basis[j]] = res.solution[j];
  }
  return out;
}

Element Coordinatizer::element_of_label(const Word& label) const {
  if (ctx_.cartan.rank() != 1) return Element::from_word(label);
  Scalar denom(1);
  for (size_t j = 0; j < label.size();) {
    if (!label[j].is_e()) break;
    size_t k = j;
    while (k < label.size() && label[k].is_e() && label[k].degree == label[j].degree) ++k;
    denom = denom * qfact_node(static_cast<long>(k - j), ctx_.cartan.r(label[j].node));
    j = k;
  }
  return Element::from_word(label) * (Scalar(1) / denom);
}

Element Coordinatizer::from_coords(const std::map<Word, Scalar>& c) const {
  Element out;
  for (const auto& [label, coeff] : c) out = out + element_of_label(label) * coeff;
  return out;
}

SpanReducer::SpanReducer(const std::vector<Element>& span, std::vector<Word> tests,
                         PairingEngine& engine)
    : tests_(std::move(tests)), engine_(&engine) {
  for (const Element& s : span) {
    Row row{functionals(s), s, 0};
    for (const Row& done : rows_) {
      Scalar f = row.vec[done.pivot];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < row.vec.size(); ++j) row.vec[j] = row.vec[j] - f * done.vec[j];
      row.rep = row.rep - done.rep * f;
    }
    size_t p = row.vec.size();
    for (size_t j = 0; j < row.vec.size(); ++j)
      if (!row.vec[j].is_zero()) {
        p = j;
        break;
      }
    if (p == row.vec.size()) continue;
    Scalar inv = Scalar(1) / row.vec[p];
    for (size_t j = 0; j < row.vec.size(); ++j) row.vec[j] = row.vec[j] * inv;
    row.rep = row.rep * inv;
    row.pivot = p;
    rows_.push_back(std::move(row));
  }
}

std::vector<Scalar> SpanReducer::functionals(const Element& x) {
  std::vector<Scalar> vec(tests_.size());
  for (size_t j = 0; j < tests_.size(); ++j) vec[j] = engine_->pair(Element::from_word(tests_[j]), x);
  return vec;
}

Element SpanReducer::reduce(const Element& x) {
  std::vector<Scalar> vec = functionals(x);
  Element rep = x;
  for (const Row& row : rows_) {
    Scalar f = vec[row.pivot];
    if (f.is_zero()) continue;
    for (size_t j = 0; j < vec.size(); ++j) vec[j] = vec[j] - f * row.vec[j];
    rep = rep - row.rep * f;
  }
  return rep;
}

bool LatticeRow::coords_in_A() const {
  for (const auto& [label, c] : coords)
    if (!c.in_A()) return false;
  return true;
}

namespace {

long val_of(const Scalar& s) {
  auto v = s.val0();
  if (!v) throw DomainError("zero entry has no valuation");
  return *v;
}

}  // namespace

std::vector<LatticeRow> dvr_triangularize(std::vector<LatticeRow> rows) {
  std::vector<LatticeRow> pending;
  for (LatticeRow& r : rows)
    if (!r.coords.empty()) pending.push_back(std::move(r));
  std::vector<LatticeRow> done;

  while (!pending.empty()) {
    // Global minimal valuation, ties by label then by row order.
    size_t best_row = pending.size();
    Word best_label;
    long best_val = 0;
    for (size_t r = 0; r < pending.size(); ++r)
      for (const auto& [label, entry] : pending[r].coords) {
        long val = val_of(entry);
        if (best_row == pending.size() || val < best_val ||
            (val == best_val && label < best_label)) {
          best_row = r;
          best_label = label;
          best_val = val;
        }
      }

    LatticeRow piv = std::move(pending[best_row]);
    pending.erase(pending.begin() + static_cast<long>(best_row));

    // Normalize by the unit part so the pivot entry becomes exactly v^k.
    Scalar unit = piv.coords.at(best_label) * Scalar::v(-best_val);
    Scalar inv = Scalar(1) / unit;
    for (auto& [label, entry] : piv.coords) entry = entry * inv;
    piv.rep = piv.rep * inv;
    piv.pivot_label = best_label;
    piv.pivot_val = best_val;

    Scalar pow = Scalar::v(best_val);
    for (LatticeRow& other : pending) {
      auto it = other.coords.find(best_label);
      if (it == other.coords.end()) continue;
      Scalar f = it->second / pow;  // valuation >= 0 since the pivot is minimal
      for (const auto& [label, entry] : piv.coords) {
        auto [jt, inserted] = other.coords.try_emplace(label, Scalar(0));
        jt->second = jt->second - f * entry;
        if (jt->second.is_zero()) other.coords.erase(jt);
      }
      other.rep = other.rep - piv.rep * f;
    }
    std::erase_if(pending, [](const LatticeRow& r) { return r.coords.empty(); });
    done.push_back(std::move(piv));
  }
  return done;
}

DvrSolve dvr_solve(const std::vector<LatticeRow>& rows, std::map<Word, Scalar> x) {
  DvrSolve out;
  out.in_A = true;
  for (const LatticeRow& row : rows) {
    Scalar c(0);
    auto it = x.find(row.pivot_label);
    if (it != x.end()) {
      c = it->second / Scalar::v(row.pivot_val);
      for (const auto& [label, entry] : row.coords) {
        auto [jt, inserted] = x.try_emplace(label, Scalar(0));
        jt->second = jt->second - c * entry;
        if (jt->second.is_zero()) x.erase(jt);
      }
    }
    if (!c.in_A()) out.in_A = false;
    out.coeffs.push_back(std::move(c));
  }
  out.in_span = x.empty();
  if (!out.in_span) out.in_A = false;
  out.residual = std::move(x);
  return out;
}

}  // namespace qloop
