// Acceptance gate: twelve exact end-to-end checks at desk scale (rank 1 and
// the rank-2 symmetric Cartan), each printed as one PASS/FAIL line.  Every
// comparison is exact equality over the scalar field; there are no
// tolerances.  Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <climits>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qloop/barcomp.hpp"
#include "qloop/crystal.hpp"
#include "qloop/normal_order.hpp"
#include "qloop/parallel.hpp"

using namespace qloop;

namespace {

Element mono(std::initializer_list<Letter> ls) { return Element::from_word(Word(ls)); }

Scalar v_pow(int e) { return Scalar::v(e); }

// All E-monomials over (node, window degree) of length <= maxlen, empty
// word included.
std::vector<Word> window_words(const PairingContext& ctx, int maxlen) {
  std::vector<Letter> alphabet;
  for (int node = 1; node <= ctx.cartan.rank(); ++node)
    for (int d = ctx.window.dmin; d <= ctx.window.dmax; ++d)
      alphabet.push_back(Letter::e(node, d));
  std::vector<Word> out{Word{}};
  size_t lo = 0;
  for (int len = 1; len <= maxlen; ++len) {
    size_t hi = out.size();
    for (size_t k = lo; k < hi; ++k)
      for (const Letter& l : alphabet) {
        Word w = out[k];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    lo = hi;
  }
  return out;
}

// Least loop degree among node-i E letters of x; INT_MAX when none appear.
int min_node_degree(const Element& x, int node) {
  int best = INT_MAX;
  for (const auto& [w, c] : x.terms())
    for (const Letter& l : w)
      if (l.is_e() && l.node == node && l.degree < best) best = l.degree;
  return best;
}

// Words of x whose E letters all sit inside the window.
Element project_window(const Element& x, const Window& window) {
  Element out;
  for (const auto& [w, c] : x.terms()) {
    bool keep = true;
    for (const Letter& l : w)
      if (l.is_e() && (l.degree < window.dmin || l.degree > window.dmax)) keep = false;
    if (keep) out.add_term(w, c);
  }
  return out;
}

bool windowed_zero(const Element& x, const PairingContext& ctx, PairingEngine& engine) {
  if (x.is_zero()) return true;
  return is_zero_windowed(x, ctx, &engine).verdict == ZeroVerdict::PresumedZero;
}

std::string coords_key(const std::map<Word, Scalar>& c) {
  std::ostringstream os;
  for (const auto& [w, s] : c) {
    for (const Letter& l : w) os << l.str();
    os << "=" << s.str() << ";";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

bool criterion_pairing_base(std::string& detail) {
  PairingEngine engine(CartanData::sl2());
  Scalar e_pair = engine.pair(mono({Letter::e(1, 0)}), mono({Letter::e(1, 0)}));
  Scalar e_expect = Scalar(1) / (v_pow(-2) - Scalar(1));
  Scalar p_pair = pair_sym(SymElement::p(1), SymElement::p(1));
  Scalar p_expect = qint(2) / (v_pow(-1) - v_pow(1));
  detail = "(E,E)=" + e_pair.str() + " (p1,p1)=" + p_pair.str();
  return e_pair == e_expect && p_pair == p_expect;
}

bool criterion_gram_values(std::string& detail) {
  CartanData cartan = CartanData::sl2();
  Element e10 = mono({Letter::e(1, 1), Letter::e(1, 0)});
  Element e01 = mono({Letter::e(1, 0), Letter::e(1, 1)});
  ScalarMatrix g = gram_serial({e10, e01}, {e10, e01}, cartan);
  Scalar den = (v_pow(-2) - Scalar(1)) * (v_pow(-2) - Scalar(1));
  bool values = g[0][0] == v_pow(-4) / den && g[1][0] == v_pow(-2) / den &&
                g[0][1] == v_pow(-2) / den && g[1][1] == Scalar(1) / den;
  int rank = matrix_rank(g);
  bool relation = straighten_rank1(e01, cartan) == v_pow(2) * e10;
  detail = "gram values " + std::string(values ? "ok" : "WRONG") +
           ", rank=" + std::to_string(rank) + ", E0E1=v^2*E1E0 " + (relation ? "ok" : "WRONG");
  return values && rank == 1 && relation;
}

bool criterion_relation_residuals(std::string& detail) {
  PairingContext sl2{CartanData::sl2(), Window(-2, 3)};
  PairingEngine eng1(sl2.cartan);
  int quad = 0;
  for (int l = -2; l <= 2; ++l)
    for (int m = -2; m <= 2; ++m) {
      Element r = quadratic_residual(1, 1, l, m, sl2.cartan);
      if (!windowed_zero(r, sl2, eng1)) {
        detail = "quadratic residual survives at l=" + std::to_string(l) +
                 " m=" + std::to_string(m);
        return false;
      }
      ++quad;
    }
  PairingContext a2{CartanData::a2(), Window(-2, 3)};
  PairingEngine eng2(a2.cartan);
  int serre = 0;
  const std::vector<std::tuple<int, int, std::vector<int>, int>> instances = {
      {1, 2, {0, 1}, 0}, {2, 1, {0, 0}, 1}};
  for (const auto& [i, j, ls, lp] : instances) {
    Element r = serre_residual(i, j, ls, lp, a2.cartan);
    if (!windowed_zero(r, a2, eng2)) {
      detail = "serre residual survives at i=" + std::to_string(i) + " j=" + std::to_string(j);
      return false;
    }
    ++serre;
  }
  detail = std::to_string(quad) + " quadratic + " + std::to_string(serre) +
           " serre residuals PresumedZero in [-2,3]";
  return true;
}

bool criterion_fprime_relations(std::string& detail) {
  long quad_checked = 0, serre_checked = 0;
  for (int which = 0; which < 2; ++which) {
    PairingContext ctx{which == 0 ? CartanData::sl2() : CartanData::a2(), Window(-2, 3)};
    PairingEngine engine(ctx.cartan);
    std::vector<Word> words = window_words(ctx, 2);
    int span = which == 0 ? 2 : 1;  // l,m in [-span, span]
    for (int i = 1; i <= ctx.cartan.rank(); ++i)
      for (int j = 1; j <= ctx.cartan.rank(); ++j) {
        Scalar vb = v_pow(ctx.cartan.b(i, j));
        for (int l = -span; l <= span; ++l)
          for (int m = -span; m <= span; ++m)
            for (const Word& w : words) {
              Element x = Element::from_word(w);
              Element lhs = engine.fprime(i, l + 1, engine.fprime(j, m, x)) -
                            vb * engine.fprime(j, m, engine.fprime(i, l + 1, x));
              Element rhs = vb * engine.fprime(i, l, engine.fprime(j, m + 1, x)) -
                            engine.fprime(j, m + 1, engine.fprime(i, l, x));
              if (lhs != rhs) {
                detail = "quadratic operator identity fails on " + Element::from_word(w).str();
                return false;
              }
              ++quad_checked;
            }
      }
  }
  // Serre-type operator identity, r = 2, on the rank-2 Cartan.
  {
    PairingContext ctx{CartanData::a2(), Window(-2, 3)};
    PairingEngine engine(ctx.cartan);
    std::vector<Word> words = window_words(ctx, 2);
    const std::vector<std::array<int, 3>> degree_sets = {{0, 1, 0}, {0, 0, 1}};
    for (const auto& [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}})
      for (const auto& ds : degree_sets)
        for (const Word& w : words) {
          Element x = Element::from_word(w);
          Element acc;
          const std::array<std::array<int, 2>, 2> perms = {{{ds[0], ds[1]}, {ds[1], ds[0]}}};
          for (const auto& perm : perms)
            for (int k = 0; k <= 2; ++k) {
              // Operator word: k node-i factors, the node-j factor, then the rest.
              std::vector<std::pair<int, int>> ops;
              for (int t = 0; t < k; ++t) ops.emplace_back(i, perm[t]);
              ops.emplace_back(j, ds[2]);
              for (int t = k; t < 2; ++t) ops.emplace_back(i, perm[t]);
              Element y = x;
              for (auto it = ops.rbegin(); it != ops.rend(); ++it)
                y = engine.fprime(it->first, it->second, y);
              Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
              acc += sign * qbinom_node(2, k, ctx.cartan.r(i)) * y;
            }
          if (!acc.is_zero()) {
            detail = "serre operator identity fails on " + Element::from_word(w).str();
            return false;
          }
          ++serre_checked;
        }
  }
  detail = std::to_string(quad_checked) + " quadratic + " + std::to_string(serre_checked) +
           " serre operator instances, exact";
  return true;
}

bool criterion_commutation(std::string& detail) {
  long checked = 0, skipped = 0;
  for (int which = 0; which < 2; ++which) {
    PairingContext ctx{which == 0 ? CartanData::sl2() : CartanData::a2(), Window(-2, 3)};
    PairingEngine engine(ctx.cartan);
    std::vector<Word> words = window_words(ctx, 2);
    for (int i = 1; i <= ctx.cartan.rank(); ++i)
      for (int j = 1; j <= ctx.cartan.rank(); ++j) {
        int b = ctx.cartan.b(i, j);
        for (int m = -1; m <= 2; ++m)
          for (int n = -1; n <= 2; ++n)
            for (const Word& w : words) {
              Element x = Element::from_word(w);
              int lowest = min_node_degree(x, i);
              int tmax = lowest == INT_MAX ? 0 : m - lowest;
              if (tmax > 0 && n - tmax < ctx.window.dmin) {
                ++skipped;  // truncation tail would leave the window
                continue;
              }
              Element ej = mono({Letter::e(j, n)});
              Element lhs =
                  engine.fprime(i, m, ej * x) - v_pow(-b) * (ej * engine.fprime(i, m, x));
              Element rhs;
              if (i == j && n == m) rhs += x;
              for (int t = 1; t <= tmax; ++t) {
                Element tail = engine.fprime(i, m - t, x);
                if (tail.is_zero()) continue;
                rhs += (v_pow(-t * b) * (v_pow(-b) - v_pow(b))) *
                       (mono({Letter::e(j, n - t)}) * tail);
              }
              if (lhs != rhs) {
                detail = "commutation fails at i=" + std::to_string(i) +
                         " j=" + std::to_string(j) + " m=" + std::to_string(m) +
                         " n=" + std::to_string(n) + " on " + x.str();
                return false;
              }
              ++checked;
            }
      }
  }
  detail = std::to_string(checked) + " instances exact, " + std::to_string(skipped) +
           " out-of-window skipped";
  return true;
}

bool criterion_qboson(std::string& detail) {
  PairingContext ctx{CartanData::sl2(), Window(-2, 3)};
  PairingEngine engine(ctx.cartan);
  const int i = 1, n = 0;
  std::vector<Element> zs;
  for (const Word& w : window_words(ctx, 2)) {
    if (w.empty()) continue;
    Element z = decompose_Z(i, n - 1, Element::from_word(w), ctx, engine).z;
    if (!z.is_zero()) zs.push_back(z);
  }
  long boson = 0;
  for (const Element& z : zs) {
    Element lhs = engine.fprime(i, n, mono({Letter::e(i, n)}) * z) -
                  v_pow(-2) * (mono({Letter::e(i, n)}) * engine.fprime(i, n, z));
    Element diff = lhs - z;
    if (!diff.is_zero() && !windowed_zero(diff, ctx, engine)) {
      detail = "q-boson fails on a projected element of weight " +
               z.weight(ctx.cartan.rank()).str();
      return false;
    }
    ++boson;
  }
  long recursion = 0;
  for (int s = 1; s <= 4; ++s) {
    long cases = 0;
    for (const Element& z : zs) {
      if (++cases > 10) break;  // bounded per power; elements repeat weights
      Element es = divided_power_E(i, n, s, z, ctx.cartan);
      Element lhs = engine.fprime(i, n, es);
      Element rhs = v_pow(-2 * s) * divided_power_E(i, n, s, engine.fprime(i, n, z), ctx.cartan) +
                    v_pow(-(s - 1)) * divided_power_E(i, n, s - 1, z, ctx.cartan);
      Element diff = lhs - rhs;
      if (!diff.is_zero() && !windowed_zero(diff, ctx, engine)) {
        detail = "divided-power recursion fails at s=" + std::to_string(s);
        return false;
      }
      ++recursion;
    }
  }
  detail = std::to_string(boson) + " q-boson + " + std::to_string(recursion) +
           " recursion instances on Z'-projected elements";
  return true;
}

bool criterion_projectors(std::string& detail) {
  PairingContext ctx{CartanData::sl2(), Window(-2, 3)};
  PairingEngine engine(ctx.cartan);
  const int i = 1, n = 0;
  std::vector<Element> zs;
  for (const Word& w : window_words(ctx, 2)) {
    if (w.empty()) continue;
    Element z = decompose_Z(i, n - 1, Element::from_word(w), ctx, engine).z;
    if (!z.is_zero()) zs.push_back(z);
  }
  long kills = 0, resolved = 0;
  for (const Element& z : zs) {
    for (int t = 0; t <= 3; ++t) {
      Element p = pi_projector(i, n, t, z, ctx, engine, false);
      Element fp = engine.fprime(i, n, p);
      if (!fp.is_zero() && !windowed_zero(fp, ctx, engine)) {
        detail = "F' does not vanish on a projection at t=" + std::to_string(t);
        return false;
      }
      ++kills;
    }
    Element acc;
    int qmax = z.weight(ctx.cartan.rank()).q[0];
    for (int t = 0; t <= qmax; ++t) {
      Element p = pi_projector(i, n, t, z, ctx, engine, false);
      acc += v_pow(t * (t - 1) / 2) * divided_power_E(i, n, t, p, ctx.cartan);
    }
    Element diff = acc - z;
    if (!diff.is_zero() && !windowed_zero(diff, ctx, engine)) {
      detail = "projector resolution misses a Z'-projected element";
      return false;
    }
    ++resolved;
  }
  int preserved = 0;
  for (const Weight& alpha : {Weight({1}, 1), Weight({2}, 1)}) {
    std::vector<Element> fam, efam;
    for (const Word& w : weight_monomials(alpha, ctx)) {
      fam.push_back(Element::from_word(w));
      efam.push_back(mono({Letter::e(1, 0)}) * fam.back());
    }
    // Free words satisfy relations, so the family's Gram rank is the graded
    // dimension, below the family size; injectivity is rank preservation.
    int r0 = matrix_rank(gram_serial(fam, fam, ctx.cartan));
    int r1 = matrix_rank(gram_serial(efam, efam, ctx.cartan));
    if (r0 <= 0 || r1 != r0) {
      detail = "E-multiplication drops Gram rank at weight " + alpha.str();
      return false;
    }
    ++preserved;
  }
  detail = std::to_string(kills) + " kernel checks, " + std::to_string(resolved) +
           " resolutions, rank preserved on " + std::to_string(preserved) + " weights";
  return true;
}

bool criterion_kashiwara(std::string& detail) {
  PairingContext ctx{CartanData::sl2(), Window(-1, 2)};
  Coordinatizer coord(ctx);
  PairingEngine& engine = coord.engine();
  for (int n = ctx.window.dmin; n <= ctx.window.dmax; ++n) {
    if (kashiwara_E(1, n, Element::one(), ctx, engine) != mono({Letter::e(1, n)})) {
      detail = "raising the unit misses E(1," + std::to_string(n) + ")";
      return false;
    }
    if (kashiwara_F(1, n, mono({Letter::e(1, n)}), ctx, engine) != Element::one()) {
      detail = "lowering E(1," + std::to_string(n) + ") misses the unit";
      return false;
    }
  }
  // FE = id on every nonzero element reached by <= 3 raising steps.
  std::map<std::string, Element> frontier{{coords_key(coord.coords(Element::one())),
                                           Element::one()}};
  long inverses = 0;
  for (int depth = 1; depth <= 3; ++depth) {
    std::map<std::string, Element> next;
    for (const auto& [key, x] : frontier)
      for (int n = ctx.window.dmin; n <= ctx.window.dmax; ++n) {
        Element y = kashiwara_E(1, n, x, ctx, engine);
        if (y.is_zero()) continue;
        Element back = kashiwara_F(1, n, y, ctx, engine);
        if (coord.coords(back) != coord.coords(x)) {
          detail = "lowering does not invert raising at depth " + std::to_string(depth) +
                   ", degree " + std::to_string(n);
          return false;
        }
        ++inverses;
        next.emplace(coords_key(coord.coords(y)), y);
      }
    frontier = std::move(next);
  }
  detail = std::to_string(inverses) + " raise/lower inversions verified to depth 3";
  return true;
}

bool criterion_bar(std::string& detail) {
  PairingContext ctx{CartanData::sl2(), Window(-3, 3)};
  PairingEngine engine(ctx.cartan);
  std::string mode = "literal";
  for (int l = 0; l <= 3; ++l) {
    Element e = mono({Letter::e(1, l)});
    Element twice = bar_element(bar_element(e, ctx), ctx);
    if (twice != e) {
      // Fall back to the jet-level comparison the completion provides.
      JetEngine je(ctx);
      Element diff = normal_order_H(twice - e, ctx.cartan);
      if (!je.jet(diff, mpq_class(l - 1)).value.is_zero()) {
        detail = "double bar moves E(1," + std::to_string(l) + ")";
        return false;
      }
      mode = "jet-level";
    }
  }
  const std::vector<std::pair<int, int>> residual_degrees = {{0, 0}, {-1, 1}, {1, 0}, {-2, 2}};
  for (const auto& [l, m] : residual_degrees) {
    Element r = bar_element(quadratic_residual(1, 1, l, m, ctx.cartan), ctx);
    if (!windowed_zero(r, ctx, engine)) {
      detail = "bar image of a defining residual is not pairing-zero";
      return false;
    }
  }
  long coefficients = 0;
  for (int l = ctx.window.dmin; l <= ctx.window.dmax; ++l) {
    Element acc;
    for (int t = 0; t <= l - ctx.window.dmin; ++t) {
      Element theta = t == 0 ? Element::one() : mono({Letter::theta(1, t)});
      acc += bar_generator(1, l - t, ctx, t) * theta;
    }
    Element diff = project_window(normal_order_H(acc, ctx.cartan), ctx.window) -
                   mono({Letter::e(1, l)});
    if (!diff.is_zero()) {
      detail = "currents identity fails at degree " + std::to_string(l);
      return false;
    }
    ++coefficients;
  }
  detail = "double bar " + mode + " on l=0..3, 4 residuals pairing-zero, " +
           std::to_string(coefficients) + " current coefficients exact";
  return true;
}

bool criterion_jets(std::string& detail) {
  PairingContext ctx{CartanData::sl2(), Window(-1, 2)};
  JetEngine je(ctx);
  std::mt19937 rng(987123);
  auto rnd = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  // Degree-1 factors keep the product spans (weight 2) within reach; the
  // filtration grows combinatorially with the E-degree of the weight.  Jets
  // need weight-homogeneous input, so each factor is one loop degree.
  auto random_line = [&]() {
    return (v_pow(rnd(-2, 2)) * Scalar(rnd(1, 3))) *
           mono({Letter::e(1, rnd(ctx.window.dmin, ctx.window.dmax))});
  };
  const std::vector<mpq_class> levels = {mpq_class(0), mpq_class(1), mpq_class(1, 2)};
  long pairs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Element a = random_line();
    Element b = random_line();
    mpq_class n = levels[rnd(0, static_cast<int>(levels.size()) - 1)];

    Jet ja = je.jet(a, n);
    if (je.jet(ja.value, n).value != ja.value) {
      detail = "jet is not idempotent at level " + n.get_str();
      return false;
    }
    mpq_class pad = n - 1;  // |alpha_0(a)| = 1
    Jet product = je.jet(a * b, n);
    Jet via_min = je.multiply(ja, je.jet(b, pad), n);
    Jet via_deep = je.multiply(ja, je.jet(b, pad - 1), n);
    if (via_min.value != product.value || via_deep.value != product.value) {
      detail = "jet product depends on the padding depth at level " + n.get_str();
      return false;
    }
    ++pairs;
  }
  detail = std::to_string(pairs) + " random pairs: idempotence and padding stability exact";
  return true;
}

bool criterion_pbw(std::string& detail) {
  CartanData cartan = CartanData::sl2();
  // Non-increasing degree sequences over {0,1,2}, length <= 3.
  std::vector<std::vector<int>> seqs{{}};
  std::function<void(std::vector<int>&, int, int)> grow = [&](std::vector<int>& cur, int maxdeg,
                                                              int room) {
    if (room == 0) return;
    for (int d = maxdeg; d >= 0; --d) {
      cur.push_back(d);
      seqs.push_back(cur);
      grow(cur, d, room - 1);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  grow(cur, 2, 3);
  const std::vector<Partition> seeds = {{}, {1}, {2}, {1, 1}};

  struct Entry {
    Element x;
    Weight alpha;
  };
  std::vector<Entry> family;
  for (const auto& s : seqs)
    for (const Partition& lam : seeds) {
      Element x = lam.empty() ? Element::one() : mono({Letter::schur_b(1, lam)});
      // Fold equal degrees into divided powers, rightmost run first.
      for (auto it = s.rbegin(); it != s.rend();) {
        int d = *it;
        int mult = 0;
        while (it != s.rend() && *it == d) ++it, ++mult;
        x = divided_power_E(1, d, mult, x, cartan);
      }
      family.push_back({x, x.weight(cartan.rank())});
    }
  if (family.size() != seqs.size() * seeds.size()) {
    detail = "family enumeration miscounts";
    return false;
  }

  // Straightening oracle: normal forms of all raw words over degrees {0,1,2}
  // of length <= 3 span exactly the non-increasing sequences.
  std::set<std::vector<int>> oracle{{}};
  std::vector<Word> raw{Word{}};
  size_t lo = 0;
  for (int len = 1; len <= 3; ++len) {
    size_t hi = raw.size();
    for (size_t k = lo; k < hi; ++k)
      for (int d = 0; d <= 2; ++d) {
        Word w = raw[k];
        w.push_back(Letter::e(1, d));
        raw.push_back(std::move(w));
      }
    lo = hi;
  }
  for (const Word& w : raw) {
    Element nf = straighten_rank1(Element::from_word(w), cartan);
    for (const auto& [word, c] : nf.terms()) {
      std::vector<int> degs;
      for (const Letter& l : word) degs.push_back(l.degree);
      oracle.insert(degs);
    }
  }
  std::set<std::vector<int>> labels(seqs.begin(), seqs.end());
  if (oracle != labels) {
    detail = "straightening oracle yields " + std::to_string(oracle.size()) +
             " sequences, enumeration " + std::to_string(labels.size());
    return false;
  }

  // Linear independence: within each weight block the Gram rank is full.
  std::map<std::pair<std::vector<int>, long>, std::vector<Element>> blocks;
  for (const Entry& e : family) blocks[{e.alpha.q, e.alpha.d}].push_back(e.x);
  size_t total_rank = 0, biggest = 0;
  for (const auto& [key, block] : blocks) {
    int r = matrix_rank(gram_serial(block, block, cartan));
    if (r != static_cast<int>(block.size())) {
      detail = "Gram rank " + std::to_string(r) + " < block size " +
               std::to_string(block.size());
      return false;
    }
    total_rank += static_cast<size_t>(r);
    biggest = std::max(biggest, block.size());
  }
  detail = std::to_string(family.size()) + " basis candidates in " +
           std::to_string(blocks.size()) + " weight blocks (largest " + std::to_string(biggest) +
           "), all blocks full rank, oracle matches " + std::to_string(labels.size()) +
           " labels";
  return total_rank == family.size();
}

bool criterion_crystal_report(std::string& detail) {
  PairingContext ctx{CartanData::sl2(), Window(-1, 2)};
  std::string first = crystal_report(3, ctx);
  std::string second = crystal_report(3, ctx);
  if (first != second) {
    detail = "report is not deterministic";
    return false;
  }
  auto grade_of = [&](int item) -> std::string {
    std::string tag = "ITEM " + std::to_string(item) + " ";
    size_t at = first.find(tag);
    if (at == std::string::npos) return "MISSING";
    size_t start = at + tag.size();
    return first.substr(start, first.find(' ', start) - start);
  };
  for (int item : {1, 2, 6, 7}) {
    if (grade_of(item) != "PASS") {
      detail = "non-conjectural item " + std::to_string(item) + " graded " + grade_of(item);
      return false;
    }
  }
  std::string conj;
  for (int item : {3, 4, 5}) {
    std::string g = grade_of(item);
    if (g == "MISSING") {
      detail = "conjectural item " + std::to_string(item) + " missing from report";
      return false;
    }
    conj += std::to_string(item) + ":" + g + " ";
  }
  detail = "deterministic, items 1/2/6/7 PASS, conjectural " + conj + "(reported only)";
  return true;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 = no budget
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "pairing base values", 1.0, criterion_pairing_base},
      {2, "length-two gram values and rank", 1.0, criterion_gram_values},
      {3, "defining relations are pairing-zero", 120.0, criterion_relation_residuals},
      {4, "derivation operator relations", 120.0, criterion_fprime_relations},
      {5, "derivation/creation commutation", 0.0, criterion_commutation},
      {6, "q-boson and divided-power recursion", 0.0, criterion_qboson},
      {7, "string projectors", 0.0, criterion_projectors},
      {8, "kashiwara operators invert", 0.0, criterion_kashiwara},
      {9, "bar involution", 300.0, criterion_bar},
      {10, "completion jets", 0.0, criterion_jets},
      {11, "divided-power basis independence", 300.0, criterion_pbw},
      {12, "crystal lattice report", 0.0, criterion_crystal_report},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      detail += " [exceeded " + std::to_string(c.budget_seconds) + "s budget]";
    }
    if (!ok) ++failures;
    std::printf("CRITERION %2d %s %s: %s (%.2fs)\n", c.id, ok ? "PASS" : "FAIL", c.name,
                detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("ACCEPTANCE: %d/12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
