#include "qloop/normal_order.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "qloop/error.hpp"

namespace qloop {

namespace {

constexpr long kRewriteCap = 1000000;

}  // namespace

bool is_normal_ordered(const Word& w) {
  bool seen_h = false;
  for (const Letter& l : w) {
    if (l.is_htype()) {
      seen_h = true;
    } else if (seen_h) {
      return false;
    }
  }
  return true;
}

Element normal_order_H(const Element& x, const CartanData& cartan) {
  Element out;
  std::vector<std::pair<Word, Scalar>> work;
  const Element expanded = expand_sym_letters(x);
  for (const auto& [w, c] : expanded.terms()) work.emplace_back(w, c);
  long steps = 0;
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    size_t pos = w.size();
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k].is_htype() && w[k + 1].is_e()) {
        pos = k;
        break;
      }
    }
    if (pos == w.size()) {
      out.add_term(std::move(w), c);
      continue;
    }
    if (++steps > kRewriteCap) throw DomainError("normal ordering exceeded the rewrite budget");
    const Letter h = w[pos];
    const Letter e = w[pos + 1];
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    work.emplace_back(std::move(swapped), c);
    long sb = static_cast<long>(h.degree) * cartan.b(h.node, e.node);
    if (sb != 0) {
      Scalar f = qint(sb) / Scalar(h.degree);
      Word contracted;
      contracted.reserve(w.size() - 1);
      contracted.insert(contracted.end(), w.begin(), w.begin() + pos);
      contracted.push_back(Letter::e(e.node, h.degree + e.degree));
      contracted.insert(contracted.end(), w.begin() + pos + 2, w.end());
      work.emplace_back(std::move(contracted), c * f);
    }
  }
  return out;
}

namespace {

// Straightened form of a single-node E-degree sequence, as coefficients on
// non-increasing sequences.  B is the node's diagonal b-entry.
using SeqCombo = std::map<std::vector<int>, Scalar>;

const SeqCombo& straighten_seq(const std::vector<int>& seq, int B) {
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<int>>, SeqCombo> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(B, seq);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  SeqCombo out;
  std::vector<std::pair<std::vector<int>, Scalar>> work{{seq, Scalar(1)}};
  Scalar vB = Scalar::v(B);
  long steps = 0;
  while (!work.empty()) {
    auto [s, c] = std::move(work.back());
    work.pop_back();
    size_t pos = s.size();
    for (size_t k = 0; k + 1 < s.size(); ++k) {
      if (s[k] < s[k + 1]) {
        pos = k;
        break;
      }
    }
    if (pos == s.size()) {
      auto it = out.find(s);
      if (it == out.end()) {
        out.emplace(std::move(s), c);
      } else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
      continue;
    }
    if (++steps > kRewriteCap) throw DomainError("straightening exceeded the rewrite budget");
    int a = s[pos], b = s[pos + 1];
    std::vector<int> t = s;
    t[pos] = b;
    t[pos + 1] = a;
    work.emplace_back(std::move(t), c * vB);
    if (b > a + 1) {
      t = s;
      t[pos] = a + 1;
      t[pos + 1] = b - 1;
      work.emplace_back(std::move(t), c * vB);
      t = s;
      t[pos] = b - 1;
      t[pos + 1] = a + 1;
      work.emplace_back(std::move(t), -c);
    }
  }
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

Element straighten_rank1(const Element& x, const CartanData& cartan) {
  Element out;
  const Element ordered = normal_order_H(x, cartan);
  for (const auto& [w, c] : ordered.terms()) {
    size_t esize = 0;
    while (esize < w.size() && w[esize].is_e()) ++esize;
    int node = 0;
    std::vector<int> seq;
    seq.reserve(esize);
    for (size_t k = 0; k < esize; ++k) {
      if (node == 0) node = w[k].node;
      if (w[k].node != node)
        throw DomainError("rank-1 straightening requires a single E node per monomial");
      seq.push_back(w[k].degree);
    }
    if (seq.empty()) {
      out.add_term(w, c);
      continue;
    }
    Word tail(w.begin() + esize, w.end());
    for (const auto& [s, sc] : straighten_seq(seq, cartan.b(node, node))) {
      Word nw;
      nw.reserve(w.size());
      for (int deg : s) nw.push_back(Letter::e(node, deg));
      nw.insert(nw.end(), tail.begin(), tail.end());
      out.add_term(std::move(nw), c * sc);
    }
  }
  return out;
}

Element quadratic_residual(int i, int j, int l, int m, const CartanData& cartan) {
  Scalar vb = Scalar::v(cartan.b(i, j));
  auto ee = [](int n1, int d1, int n2, int d2) {
    return Element::from_word({Letter::e(n1, d1), Letter::e(n2, d2)});
  };
  Element r = ee(i, l + 1, j, m) * vb;
  r -= ee(j, m, i, l + 1);
  r -= ee(i, l, j, m + 1);
  r += ee(j, m + 1, i, l) * vb;
  return r;
}

Element serre_residual(int i, int j, const std::vector<int>& ls, int lprime,
                       const CartanData& cartan) {
  if (i == j) throw DomainError("Serre residual needs distinct nodes");
  size_t r = static_cast<size_t>(1 - cartan.a(i, j));
  if (ls.size() != r) throw DomainError("Serre residual needs 1 - a_ij loop degrees");
  std::vector<size_t> perm(r);
  for (size_t k = 0; k < r; ++k) perm[k] = k;
  std::sort(perm.begin(), perm.end());
  Element out;
  do {
    for (size_t k = 0; k <= r; ++k) {
      Scalar coeff = qbinom_node(static_cast<long>(r), static_cast<long>(k), cartan.r(i));
      if (k % 2 == 1) coeff = -coeff;
      Word w;
      w.reserve(r + 1);
      for (size_t t = 0; t < k; ++t) w.push_back(Letter::e(i, ls[perm[t]]));
      w.push_back(Letter::e(j, lprime));
      for (size_t t = k; t < r; ++t) w.push_back(Letter::e(i, ls[perm[t]]));
      out.add_term(std::move(w), coeff);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace qloop
