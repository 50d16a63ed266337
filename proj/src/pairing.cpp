#include "qloop/pairing.hpp"

#include <algorithm>
#include <set>

#include "qloop/error.hpp"
#include "qloop/normal_order.hpp"

namespace qloop {

namespace {

SymElement sym_expansion(const Letter& l) {
  switch (l.kind) {
    case LetterKind::H: return SymElement::p(l.degree);
    case LetterKind::Xi: return xi_coeff(l.degree);
    case LetterKind::Chi: return chi_coeff(l.degree);
    case LetterKind::Theta: return theta_coeff(l.degree);
    case LetterKind::SchurB: return schur(l.parts);
    default: throw DomainError("E letter has no symmetric-function expansion");
  }
}

bool pure_htype(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.is_htype(); });
}

// A product of power sums across nodes, stored as sorted (node, degree) pairs.
using PowerMono = std::vector<std::pair<int, int>>;

// Expands a pure H-type word into a combination of power-sum monomials.
std::map<PowerMono, Scalar> power_sum_expansion(const Word& w) {
  std::map<PowerMono, Scalar> acc;
  acc.emplace(PowerMono{}, Scalar(1));
  for (const Letter& l : w) {
    const SymElement sym = sym_expansion(l);
    std::map<PowerMono, Scalar> next;
    for (const auto& [mono, c] : acc)
      for (const auto& [lam, sc] : sym.terms()) {
        PowerMono m = mono;
        for (int part : lam) m.emplace_back(l.node, part);
        std::sort(m.begin(), m.end());
        Scalar add = c * sc;
        auto [it, fresh] = next.try_emplace(std::move(m), add);
        if (!fresh) it->second += add;
      }
    acc = std::move(next);
  }
  return acc;
}

// (p_{i,s}, p_{j,t}) = delta_{st} [s b_ij] / (s (v^-1 - v)); nonzero for
// adjacent nodes, so the pairing does not factor over nodes.
Scalar power_pair(int s, int i, int j, const CartanData& cartan) {
  return qint(static_cast<long>(s) * cartan.b(i, j)) /
         (Scalar(s) * (Scalar::v(-1) - Scalar::v(1)));
}

Scalar permanent(const std::vector<std::vector<Scalar>>& m) {
  const size_t n = m.size();
  std::vector<char> used(n, 0);
  std::function<Scalar(size_t)> rec = [&](size_t row) -> Scalar {
    if (row == n) return Scalar(1);
    Scalar total;
    for (size_t col = 0; col < n; ++col) {
      if (used[col] || m[row][col].is_zero()) continue;
      used[col] = 1;
      Scalar sub = rec(row + 1);
      used[col] = 0;
      if (!sub.is_zero()) total += m[row][col] * sub;
    }
    return total;
  };
  return rec(0);
}

// Power sums of distinct degrees are orthogonal; within one degree the value
// is the permanent of the pairwise power_pair matrix (each way of matching
// the factors contributes once, which also supplies the m! for repeats).
Scalar mono_pair(const PowerMono& x, const PowerMono& y, const CartanData& cartan) {
  if (x.size() != y.size()) return Scalar();
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> by_degree;
  for (const auto& [node, deg] : x) by_degree[deg].first.push_back(node);
  for (const auto& [node, deg] : y) by_degree[deg].second.push_back(node);
  Scalar total(1);
  for (const auto& [deg, sides] : by_degree) {
    const auto& [xs, ys] = sides;
    if (xs.size() != ys.size()) return Scalar();
    const size_t n = xs.size();
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) m[r][c] = power_pair(deg, xs[r], ys[c], cartan);
    total *= permanent(m);
    if (total.is_zero()) return total;
  }
  return total;
}

// Pairing of two pure H-type words, through their power-sum expansions.
Scalar pair_pure_sym(const Word& a, const Word& b, const CartanData& cartan) {
  const std::map<PowerMono, Scalar> ea = power_sum_expansion(a);
  const std::map<PowerMono, Scalar> eb = power_sum_expansion(b);
  Scalar total;
  for (const auto& [ma, ca] : ea)
    for (const auto& [mb, cb] : eb) {
      Scalar p = mono_pair(ma, mb, cartan);
      if (!p.is_zero()) total += ca * cb * p;
    }
  return total;
}

// Replaces Xi/Chi/SchurB letters by their power-sum expansions; E, H and
// Theta letters are native to the pairing recursion.
Element expand_for_pairing(const Element& x) {
  bool needed = false;
  for (const auto& [w, c] : x.terms())
    for (const Letter& l : w)
      if (l.kind == LetterKind::Xi || l.kind == LetterKind::Chi ||
          l.kind == LetterKind::SchurB)
        needed = true;
  if (!needed) return x;
  Element out;
  for (const auto& [w, c] : x.terms()) {
    Element acc = Element::one() * c;
    for (const Letter& l : w) {
      if (l.kind == LetterKind::Xi || l.kind == LetterKind::Chi ||
          l.kind == LetterKind::SchurB) {
        Element expanded;
        const SymElement sym = sym_expansion(l);
        for (const auto& [lam, sc] : sym.terms()) {
          Word pw;
          for (int part : lam) pw.push_back(Letter::h(l.node, part));
          expanded.add_term(std::move(pw), sc);
        }
        acc = acc * expanded;
      } else {
        acc = acc * Element::from_letter(l);
      }
    }
    out += acc;
  }
  return out;
}

// Enumerates the coproduct splittings of `a` whose left component has weight
// `target`, reporting (left, right, twist exponent).  Letters contribute:
//   E: fully to the left, or theta_{i,t} left / E_{i,deg-t} right (t >= 0);
//   H: to one side (primitive);
//   Theta_m: theta_{m-t} left / theta_t right.
// The twist exponent collects -(wt x2, wt y1) over the twisted products;
// only pairs (split E before full E) contribute.
void for_each_splitting(const Word& a, const Weight& target, const CartanData& cartan,
                        const std::function<void(Word, Word, long)>& cb) {
  int rank = cartan.rank();
  std::vector<std::vector<size_t>> epos(rank);
  for (size_t k = 0; k < a.size(); ++k) {
    const Letter& l = a[k];
    if (l.is_e()) {
      epos[l.node - 1].push_back(k);
    } else if (l.kind == LetterKind::Xi || l.kind == LetterKind::Chi ||
               l.kind == LetterKind::SchurB) {
      throw DomainError("unexpanded symbolic letter in pairing recursion: " + l.str());
    }
  }
  for (int i = 0; i < rank; ++i)
    if (target.q[i] < 0 || target.q[i] > static_cast<int>(epos[i].size())) return;

  std::vector<char> full(a.size(), 0);
  std::vector<int> contrib(a.size(), 0);

  auto emit = [&]() {
    Word left, right;
    long twist = 0;
    for (size_t k = 0; k < a.size(); ++k) {
      const Letter& l = a[k];
      if (l.is_e()) {
        if (full[k]) {
          for (size_t p = 0; p < k; ++p)
            if (a[p].is_e() && !full[p]) twist += cartan.b(a[p].node, l.node);
          left.push_back(l);
        } else {
          if (contrib[k] > 0) left.push_back(Letter::theta(l.node, contrib[k]));
          right.push_back(Letter::e(l.node, l.degree - contrib[k]));
        }
      } else if (l.kind == LetterKind::H) {
        (contrib[k] > 0 ? left : right).push_back(l);
      } else {  // Theta
        if (contrib[k] > 0) left.push_back(Letter::theta(l.node, contrib[k]));
        if (contrib[k] < l.degree) right.push_back(Letter::theta(l.node, l.degree - contrib[k]));
      }
    }
    cb(std::move(left), std::move(right), -twist);
  };

  std::function<void(size_t, long)> assign = [&](size_t k, long rem) {
    if (k == a.size()) {
      if (rem == 0) emit();
      return;
    }
    const Letter& l = a[k];
    if (l.is_e()) {
      if (full[k]) {
        assign(k + 1, rem);
        return;
      }
      for (long t = 0; t <= rem; ++t) {
        contrib[k] = static_cast<int>(t);
        assign(k + 1, rem - t);
      }
      contrib[k] = 0;
    } else if (l.kind == LetterKind::H) {
      contrib[k] = 0;
      assign(k + 1, rem);
      if (l.degree <= rem) {
        contrib[k] = l.degree;
        assign(k + 1, rem - l.degree);
        contrib[k] = 0;
      }
    } else {  // Theta
      long hi = std::min<long>(l.degree, rem);
      for (long c = 0; c <= hi; ++c) {
        contrib[k] = static_cast<int>(c);
        assign(k + 1, rem - c);
      }
      contrib[k] = 0;
    }
  };

  std::function<void(int)> choose_node = [&](int node) {
    if (node == rank) {
      long rem = target.d;
      for (size_t k = 0; k < a.size(); ++k)
        if (a[k].is_e() && full[k]) rem -= a[k].degree;
      if (rem >= 0) assign(0, rem);
      return;
    }
    int need = target.q[node];
    const auto& pos = epos[node];
    std::function<void(size_t, int)> comb = [&](size_t start, int chosen) {
      if (chosen == need) {
        choose_node(node + 1);
        return;
      }
      for (size_t p = start; p + (need - chosen) <= pos.size(); ++p) {
        full[pos[p]] = 1;
        comb(p + 1, chosen + 1);
        full[pos[p]] = 0;
      }
    };
    comb(0, 0);
  };
  choose_node(0);
}

}  // namespace

Scalar base_pair(const Letter& a, const Letter& b, const CartanData& cartan) {
  if (a.is_e() && b.is_e()) {
    if (a.node != b.node || a.degree != b.degree) return Scalar();
    return Scalar(1) / (Scalar::v(-2 * cartan.r(a.node)) - Scalar(1));
  }
  if (a.is_e() || b.is_e()) return Scalar();
  return pair_pure_sym(Word{a}, Word{b}, cartan);
}

Scalar counit(const Element& x) { return x.coeff(Word{}); }

Scalar PairingEngine::pair(const Element& x, const Element& y) {
  Element xe = expand_for_pairing(x);
  Element ye = expand_for_pairing(y);
  Scalar total;
  for (const auto& [wx, cx] : xe.terms())
    for (const auto& [wy, cy] : ye.terms()) {
      Scalar p = pair_words(wx, wy);
      if (!p.is_zero()) total += cx * cy * p;
    }
  return total;
}

Scalar PairingEngine::pair_words(const Word& a, const Word& b) {
  int rank = cartan_.rank();
  if (weight_of(a, rank) != weight_of(b, rank)) return Scalar();
  if (a.empty()) return Scalar(1);  // equal weights force b empty too
  if (a.size() == 1 && b.size() == 1) return base_pair(a[0], b[0], cartan_);
  std::pair<Word, Word> key = (a <= b) ? std::make_pair(a, b) : std::make_pair(b, a);
  auto hit = cache_.find(key);
  if (hit != cache_.end()) return hit->second;
  Scalar result = (pure_htype(a) && pure_htype(b))
                      ? pair_pure_sym(a, b, cartan_)
                      : pair_words_uncached(key.first, key.second);
  cache_.emplace(std::move(key), result);
  return result;
}

Scalar PairingEngine::pair_words_uncached(const Word& a, const Word& b) {
  if (a.size() == 1) return single_vs_word(a[0], b);
  if (b.size() == 1) return single_vs_word(b[0], a);
  return split_pair(a, b);
}

Scalar PairingEngine::single_vs_word(const Letter& l, const Word& b) {
  // b has length >= 2 and the same weight as the single letter l.
  const Letter& b0 = b.front();
  Word rest(b.begin() + 1, b.end());
  if (l.is_e()) {
    if (b0.is_e()) return Scalar();  // both coproduct slots pair to zero
    Scalar head = base_pair(Letter::theta(l.node, b0.degree), b0, cartan_);
    if (head.is_zero()) return Scalar();
    Word tail{Letter::e(l.node, l.degree - b0.degree)};
    return head * pair_words(tail, rest);
  }
  if (l.kind == LetterKind::H) return Scalar();  // primitive: both slots die
  if (l.kind == LetterKind::Theta) {
    if (b0.is_e()) return Scalar();
    int t = l.degree - b0.degree;
    if (t < 1) return Scalar();  // t = 0 needs an empty remainder, but rest is nonempty
    Scalar head = base_pair(Letter::theta(l.node, b0.degree), b0, cartan_);
    if (head.is_zero()) return Scalar();
    Word tail{Letter::theta(l.node, t)};
    return head * pair_words(tail, rest);
  }
  throw DomainError("unexpanded symbolic letter in pairing recursion: " + l.str());
}

Scalar PairingEngine::split_pair(const Word& a, const Word& b) {
  Word b0{b.front()};
  Word rest(b.begin() + 1, b.end());
  Weight target = weight_of(b0, cartan_.rank());
  Scalar total;
  for_each_splitting(a, target, cartan_, [&](Word left, Word right, long twist) {
    Scalar p1 = pair_words(left, b0);
    if (p1.is_zero()) return;
    Scalar p2 = pair_words(right, rest);
    if (p2.is_zero()) return;
    total += Scalar::v(static_cast<int>(twist)) * p1 * p2;
  });
  return total;
}

Element PairingEngine::fprime(int node, int n, const Element& x) {
  Element ordered = normal_order_H(x, cartan_);
  for (const auto& [w, c] : ordered.terms())
    for (const Letter& l : w)
      if (l.is_htype())
        throw DomainError("fprime is defined on E-letter elements; found " + l.str());
  Weight target = Weight::zero(cartan_.rank());
  target.q[node - 1] = 1;
  target.d = n;
  Scalar factor = Scalar::v(-2 * cartan_.r(node)) - Scalar(1);
  Word eword{Letter::e(node, n)};
  Element out;
  for (const auto& [w, c] : ordered.terms()) {
    for_each_splitting(w, target, cartan_, [&](Word left, Word right, long twist) {
      Scalar p = pair_words(left, eword);
      if (p.is_zero()) return;
      out.add_term(std::move(right), c * factor * Scalar::v(static_cast<int>(twist)) * p);
    });
  }
  return out;
}

TensorElement coproduct(const Element& x, const CartanData& cartan, const Window& window) {
  TensorElement out;
  const Element expanded = expand_for_pairing(x);
  for (const auto& [w, c] : expanded.terms()) {
    TensorElement acc = TensorElement::one();
    for (const Letter& l : w) {
      TensorElement dl;
      if (l.is_e()) {
        dl.add_term(Word{l}, Word{}, Scalar(1));
        for (int t = 0; l.degree - t >= window.dmin; ++t) {
          Word left;
          if (t > 0) left.push_back(Letter::theta(l.node, t));
          dl.add_term(std::move(left), Word{Letter::e(l.node, l.degree - t)}, Scalar(1));
        }
      } else if (l.kind == LetterKind::H) {
        dl.add_term(Word{l}, Word{}, Scalar(1));
        dl.add_term(Word{}, Word{l}, Scalar(1));
      } else {  // Theta (Xi/Chi/SchurB were expanded above)
        for (int t = 0; t <= l.degree; ++t) {
          Word left, right;
          if (t < l.degree) left.push_back(Letter::theta(l.node, l.degree - t));
          if (t > 0) right.push_back(Letter::theta(l.node, t));
          dl.add_term(std::move(left), std::move(right), Scalar(1));
        }
      }
      acc = tensor_multiply(acc, dl, cartan);
    }
    acc *= c;
    out += acc;
  }
  return out;
}

namespace {

// Non-increasing degree sequences of the given length inside the window
// with the given sum.
void degree_multisets(int length, int sum, int hi, const Window& win,
                      std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (length == 0) {
    if (sum == 0) out.push_back(cur);
    return;
  }
  for (int d = std::min(hi, win.dmax); d >= win.dmin; --d) {
    // Remaining letters are bounded by d and dmin on each side.
    int rem = sum - d;
    if (rem > (length - 1) * d || rem < (length - 1) * win.dmin) continue;
    cur.push_back(d);
    degree_multisets(length - 1, rem, d, win, cur, out);
    cur.pop_back();
  }
}

// Partition tuples over nodes with total weight d, emitted as H-words.
void h_monomials(int node, int rank, int d, Word& cur, std::vector<Word>& out) {
  if (node > rank) {
    if (d == 0) out.push_back(canonical_word(cur));
    return;
  }
  for (int here = 0; here <= d; ++here) {
    if (node == rank && here != d) continue;
    for (const Partition& lam : partitions_of(here)) {
      size_t base = cur.size();
      for (int part : lam) cur.push_back(Letter::h(node, part));
      h_monomials(node + 1, rank, d - here, cur, out);
      cur.resize(base);
    }
  }
}

}  // namespace

std::vector<Word> weight_monomials(const Weight& alpha, const PairingContext& ctx) {
  int rank = ctx.cartan.rank();
  if (static_cast<int>(alpha.q.size()) != rank) throw DomainError("weight rank mismatch");
  std::vector<Word> out;
  if (alpha.q_is_zero()) {
    if (alpha.d < 0) return out;
    Word cur;
    h_monomials(1, rank, static_cast<int>(alpha.d), cur, out);
    return out;
  }
  for (int i = 0; i < rank; ++i)
    if (alpha.q[i] < 0) return out;

  // Per-node degree multisets, then every interleaving.
  std::vector<std::vector<std::vector<int>>> per_node(rank);
  std::function<void(int, long, std::vector<const std::vector<int>*>&)> combine =
      [&](int node, long dleft, std::vector<const std::vector<int>*>& picks) {
        if (node == rank) {
          if (dleft != 0) return;
          std::vector<Letter> letters;
          for (int i = 0; i < rank; ++i)
            for (int deg : *picks[i]) letters.push_back(Letter::e(i + 1, deg));
          std::sort(letters.begin(), letters.end());
          do {
            out.push_back(letters);
          } while (std::next_permutation(letters.begin(), letters.end()));
          return;
        }
        for (const auto& ms : per_node[node]) {
          long s = 0;
          for (int deg : ms) s += deg;
          picks.push_back(&ms);
          combine(node + 1, dleft - s, picks);
          picks.pop_back();
        }
      };

  // Enumerate each node's multisets for every feasible partial sum.
  long dmin_total = 0, dmax_total = 0;
  for (int i = 0; i < rank; ++i) {
    dmin_total += static_cast<long>(alpha.q[i]) * ctx.window.dmin;
    dmax_total += static_cast<long>(alpha.q[i]) * ctx.window.dmax;
  }
  if (alpha.d < dmin_total || alpha.d > dmax_total) return out;
  for (int i = 0; i < rank; ++i) {
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    int lo = alpha.q[i] * ctx.window.dmin, hi = alpha.q[i] * ctx.window.dmax;
    for (int s = lo; s <= hi; ++s) degree_multisets(alpha.q[i], s, ctx.window.dmax, ctx.window, cur, sets);
    per_node[i] = std::move(sets);
  }
  std::vector<const std::vector<int>*> picks;
  combine(0, alpha.d, picks);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> weight_monomials_mixed(const Weight& alpha, const PairingContext& ctx) {
  int rank = ctx.cartan.rank();
  if (static_cast<int>(alpha.q.size()) != rank) throw DomainError("weight rank mismatch");
  if (alpha.q_is_zero()) return weight_monomials(alpha, ctx);
  long dmin_total = 0;
  for (int i = 0; i < rank; ++i) dmin_total += static_cast<long>(alpha.q[i]) * ctx.window.dmin;
  std::vector<Word> out;
  for (long e = 0; alpha.d - e >= dmin_total; ++e) {
    Weight epart{alpha.q, alpha.d - e};
    std::vector<Word> ewords = weight_monomials(epart, ctx);
    if (ewords.empty()) continue;
    std::vector<Word> hwords;
    Word cur;
    h_monomials(1, rank, static_cast<int>(e), cur, hwords);
    for (const Word& ew : ewords)
      for (const Word& hw : hwords) {
        Word w = ew;
        w.insert(w.end(), hw.begin(), hw.end());
        out.push_back(canonical_word(w));
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ZeroTestResult is_zero_windowed(const Element& x, const PairingContext& ctx,
                                PairingEngine* engine) {
  PairingEngine local(ctx.cartan);
  PairingEngine& eng = engine ? *engine : local;
  ZeroTestResult res;
  if (x.is_zero()) return res;
  for (const auto& [alpha, part] : x.split_by_weight(ctx.cartan.rank())) {
    for (const Word& t : weight_monomials(alpha, ctx)) {
      Scalar val = eng.pair(part, Element::from_word(t));
      if (!val.is_zero()) {
        res.verdict = ZeroVerdict::Nonzero;
        res.witness = t;
        res.value = std::move(val);
        return res;
      }
    }
  }
  return res;
}

ZDecomposition decompose_Z(int node, int k, const Element& x, const PairingContext& ctx,
                           PairingEngine& engine) {
  int rank = ctx.cartan.rank();
  for (const auto& [w, c] : x.terms())
    for (const Letter& l : w)
      if (!l.is_e()) throw DomainError("decompose_Z is defined on E-letter elements");
  if (x.is_zero()) return {Element(), Element()};
  Weight alpha = x.weight(rank);

  std::set<Word> gen_set;
  for (int m = ctx.window.dmin; m <= std::min(k, ctx.window.dmax); ++m) {
    Weight beta = alpha;
    beta.q[node - 1] -= 1;
    beta.d -= m;
    if (beta.q[node - 1] < 0) break;
    for (const Word& u : weight_monomials(beta, ctx)) {
      Word g{Letter::e(node, m)};
      g.insert(g.end(), u.begin(), u.end());
      gen_set.insert(canonical_word(std::move(g)));
    }
  }
  std::vector<Word> gens(gen_set.begin(), gen_set.end());
  if (gens.empty()) return {Element(), x};

  size_t n = gens.size();
  ScalarMatrix gram(n, std::vector<Scalar>(n));
  std::vector<Scalar> rhs(n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = r; c < n; ++c) {
      gram[r][c] = engine.pair_words(gens[r], gens[c]);
      gram[c][r] = gram[r][c];
    }
    rhs[r] = engine.pair(x, Element::from_word(gens[r]));
  }
  SolveResult sol = solve_system(std::move(gram), std::move(rhs));
  if (!sol.consistent)
    throw WindowError("decompose_Z: window family cannot represent the W-component at weight " +
                      alpha.str() + "; widen the window");
  ZDecomposition out;
  for (size_t j = 0; j < n; ++j)
    if (!sol.solution[j].is_zero()) out.w.add_term(gens[j], sol.solution[j]);
  out.z = x - out.w;
  return out;
}

}  // namespace qloop
