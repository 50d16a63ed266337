#include "qloop/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

#include "qloop/barcomp.hpp"
#include "qloop/crystal.hpp"
#include "qloop/error.hpp"
#include "qloop/linalg.hpp"
#include "qloop/normal_order.hpp"
#include "qloop/parallel.hpp"
#include "qloop/symfunc.hpp"
#include "qloop/textio.hpp"

namespace qloop {

bool SuiteReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass && !c.conjectural) return false;
  return true;
}

size_t SuiteReport::failures() const {
  size_t n = 0;
  for (const auto& c : checks)
    if (!c.pass && !c.conjectural) ++n;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "scalars", "symfunc",   "relations", "pairing", "fprime-lemmas", "qboson",
      "projectors", "kashiwara", "bar",      "jets",    "pbw",           "crystal"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& ns = suite_names();
  return std::find(ns.begin(), ns.end(), name) != ns.end();
}

namespace {

using Checks = std::vector<CheckResult>;

void put(Checks& out, const std::string& name, bool pass, const std::string& detail = "",
         bool conjectural = false) {
  out.push_back(CheckResult{name, pass, conjectural, detail});
}

Element mono(std::initializer_list<Letter> ls) {
  Word w(ls);
  return Element::from_word(std::move(w));
}

Scalar v_pow(int k) { return Scalar::v(k); }

/// All window E-monomials of length <= maxlen over every node (the empty
/// word included), in a deterministic order.
std::vector<Word> window_words(const PairingContext& ctx, int maxlen) {
  std::vector<Letter> letters;
  for (int i = 1; i <= ctx.cartan.rank(); ++i)
    for (int d = ctx.window.dmin; d <= ctx.window.dmax; ++d) letters.push_back(Letter::e(i, d));
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (const auto& l : letters) {
        Word e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Smallest degree of an E-letter of node `i` occurring in x; nullopt when
/// there is none (then F'_{i,m} x = 0 for every m below the window).
std::optional<int> min_node_degree(const Element& x, int node) {
  std::optional<int> best;
  for (const auto& [w, c] : x.terms())
    for (const auto& l : w)
      if (l.kind == LetterKind::E && l.node == node)
        if (!best || l.degree < *best) best = l.degree;
  return best;
}

// ---------------------------------------------------------------- scalars --

Checks suite_scalars(const PairingContext&) {
  Checks out;
  const Scalar u = v_pow(-1) - v_pow(1);  // v^{-1} - v

  put(out, "qint-values",
      qint(2) == v_pow(-1) + v_pow(1) && qint(3) == v_pow(-2) + Scalar(1) + v_pow(2) &&
          qint(0).is_zero() && qint(-3) == -qint(3) && qint(1).is_one(),
      "[2] = v^-1 + v, [3] = v^-2 + 1 + v^2, [0] = 0, [-l] = -[l]");

  {
    bool ok = true;
    for (long n = 0; n <= 6 && ok; ++n)
      for (long k = 0; k <= n && ok; ++k) {
        ok = qbinom(n, k) == qbinom(n, n - k) && qbinom(n, k) * qfact(k) * qfact(n - k) == qfact(n);
      }
    put(out, "qbinom-factorial-identity", ok, "[n k][k]![n-k]! = [n]! and symmetry, n <= 6");
  }

  {
    bool ok = true;
    for (long l = 0; l <= 5 && ok; ++l) ok = qint(l).bar() == qint(l);
    Scalar s = (Scalar(1) - v_pow(2)) / (v_pow(3));
    ok = ok && s.bar().bar() == s && (s * s.bar()) == (s.bar() * s);
    put(out, "bar-involution", ok, "bar fixes quantum integers; involutive on samples");
  }

  {
    Scalar a = parse_scalar("(v^2 - 1)/(v - 1)");
    Scalar b = parse_scalar("v + 1");
    Scalar c = parse_scalar("(2*v^-2 + 2)/(4)");
    Scalar d = parse_scalar("(v^-2 + 1)/(2)");
    put(out, "canonical-reduction", a == b && c == d,
        "gcd and content reduction produce equal canonical forms");
  }

  {
    Scalar s = (Scalar(1) + v_pow(1)) / (Scalar(1) - v_pow(1));
    bool ok = s.val0() == std::optional<long>(0) && s.in_A() && s.residue_at_zero() == 1;
    Scalar t = v_pow(-2);
    ok = ok && t.val0() == std::optional<long>(-2) && !t.in_A();
    ok = ok && !Scalar().val0().has_value();
    put(out, "valuation-at-zero", ok, "val0, A-membership and residue on samples");
  }

  {
    bool ok = true;
    for (long l = 1; l <= 4 && ok; ++l)
      for (int r = 1; r <= 3 && ok; ++r) ok = qint_node(l, r) == qint(l).stretched(r);
    ok = ok && qint(2) * u == v_pow(-2) - v_pow(2);
    put(out, "node-stretching", ok, "[l]_{v_i} = [l] with v -> v^{r_i}");
  }
  return out;
}

// ---------------------------------------------------------------- symfunc --

Checks suite_symfunc(const PairingContext&) {
  Checks out;

  {
    bool ok = true;
    for (int s = 1; s <= 6 && ok; ++s) {
      SymElement acc = xi_coeff(s) + chi_coeff(s);
      for (int a = 1; a < s; ++a) acc += xi_coeff(a) * chi_coeff(s - a);
      ok = acc.is_zero();
    }
    put(out, "xi-chi-inverse", ok, "xi(z) chi(z) = 1 through degree 6");
  }

  {
    bool ok = true;
    for (int s = 1; s <= 5 && ok; ++s) {
      SymElement acc = xi_coeff(s) * v_pow(-s) + chi_coeff(s) * v_pow(s);
      for (int a = 1; a < s; ++a) acc += xi_coeff(a) * chi_coeff(s - a) * v_pow(-a + (s - a));
      ok = acc == theta_coeff(s);
    }
    put(out, "theta-factorization", ok, "theta(z) = xi(v^-1 z) chi(v z) through degree 5");
  }

  {
    const Scalar u = Scalar::v(-1) - Scalar::v(1);
    bool ok = pair_sym(SymElement::p({1}), SymElement::p({1})) == qint(2) / u;
    ok = ok && pair_sym(SymElement::p({2}), SymElement::p({1})).is_zero();
    ok = ok && pair_sym(SymElement::p({2, 1}), SymElement::p({2, 1})) ==
                   (qint(4) / (Scalar(2) * u)) * (qint(2) / u);
    ok = ok && pair_sym(theta_coeff(1), theta_coeff(1)) == v_pow(-2) - v_pow(2);
    put(out, "power-sum-pairing", ok,
        "(p_m, p_n) = delta [2m]/(m(v^-1 - v)), z_lambda extension, (theta_1, theta_1)");
  }

  {
    SymElement jt = xi_coeff(1) * xi_coeff(1) - xi_coeff(2);
    bool ok = schur({1, 1}) == jt && schur({1}) == xi_coeff(1);
    for (int d = 1; d <= 4 && ok; ++d)
      for (const auto& lam : partitions_of(d)) {
        auto c = to_schur_basis(schur(lam));
        ok = ok && c.size() == 1 && c.count(lam) == 1 && c.begin()->second.is_one();
        if (!ok) break;
      }
    put(out, "schur-jacobi-trudi", ok, "det(xi_{l_i - i + j}) and Schur-basis round trip, |l| <= 4");
  }

  {
    bool ok = true;
    for (int s = 1; s <= 5 && ok; ++s) ok = bar_sym(xi_coeff(s)) == xi_coeff(s);
    ok = ok && bar_sym(bar_sym(theta_coeff(3))) == theta_coeff(3);
    ok = ok && bar_sym(bar_sym(SymElement::p({2, 1}))) == SymElement::p({2, 1});
    put(out, "bar-fixes-xi", ok, "bar fixes xi_s and is involutive");
  }

  {
    SymElement x = SymElement::p({3, 1}) + SymElement::p({2}) * v_pow(2);
    SymElement back;
    auto xc = to_xi_basis(x);
    for (const auto& [lam, c] : xc) back += xi_monomial(lam) * c;
    put(out, "xi-basis-round-trip", back == x, "p -> xi -> p on a mixed sample");
  }
  return out;
}

// -------------------------------------------------------------- relations --

Checks suite_relations(const PairingContext& ctx) {
  Checks out;
  const CartanData& cart = ctx.cartan;
  PairingEngine engine(cart);

  {
    size_t checked = 0, failed = 0;
    for (int i = 1; i <= cart.rank(); ++i)
      for (int l = ctx.window.dmin; l + 1 <= ctx.window.dmax; ++l)
        for (int m = ctx.window.dmin; m + 1 <= ctx.window.dmax; ++m) {
          Element res = quadratic_residual(i, i, l, m, cart);
          ++checked;
          if (is_zero_windowed(res, ctx, &engine).verdict != ZeroVerdict::PresumedZero) ++failed;
        }
    put(out, "quadratic-residuals", failed == 0,
        std::to_string(checked) + " residuals PresumedZero under the windowed pairing test");
  }

  if (cart.rank() >= 2 && cart.a(1, 2) == -1) {
    size_t failed = 0;
    std::vector<std::pair<std::vector<int>, int>> instances = {{{0, 1}, 0}, {{0, 0}, 1}};
    for (const auto& [ls, lp] : instances) {
      Element res = serre_residual(1, 2, ls, lp, cart);
      if (is_zero_windowed(res, ctx, &engine).verdict != ZeroVerdict::PresumedZero) ++failed;
    }
    put(out, "serre-residuals", failed == 0,
        std::to_string(instances.size()) + " loop Serre residuals PresumedZero");
  }

  if (cart.rank() == 1) {
    size_t failed = 0, checked = 0;
    auto words = window_words(ctx, 3);
    for (size_t k = 0; k < words.size(); k += (words[k].size() < 3 ? 1 : 9)) {
      const Word& w = words[k];
      if (w.size() < 2) continue;
      Element x = Element::from_word(w);
      Element s = straighten_rank1(x, cart);
      ++checked;
      bool sorted = true;
      for (const auto& [sw, c] : s.terms())
        for (size_t k = 0; k + 1 < sw.size(); ++k)
          if (sw[k].degree < sw[k + 1].degree) sorted = false;
      if (!sorted || is_zero_windowed(x - s, ctx, &engine).verdict != ZeroVerdict::PresumedZero)
        ++failed;
    }
    put(out, "straighten-soundness", failed == 0,
        std::to_string(checked) + " words: non-increasing output, pairing-equal to input");
  }

  {
    Element lhs = mono({Letter::h(1, 1), Letter::e(1, 0)});
    Element rhs = mono({Letter::e(1, 0), Letter::h(1, 1)});
    rhs.add_term({Letter::e(1, 1)}, qint(cart.b(1, 1)));
    put(out, "h-commutation-rule", normal_order_H(lhs, cart) == rhs,
        "H(1,1) E(1,0) = E(1,0) H(1,1) + [b_11] E(1,1)");
  }

  {
    Element x = mono({Letter::h(1, 2), Letter::e(1, 1), Letter::e(1, 0)});
    Element n = normal_order_H(x, cart);
    bool ok = !n.is_zero() && n.weight(cart.rank()) == x.weight(cart.rank());
    for (const auto& [w, c] : n.terms()) ok = ok && is_normal_ordered(w);
    put(out, "normal-order-grading", ok, "normal ordering preserves weight; output ordered");
  }
  return out;
}

// ---------------------------------------------------------------- pairing --

Checks suite_pairing(const PairingContext& ctx) {
  Checks out;
  PairingEngine engine(ctx.cartan);
  const Element e0 = mono({Letter::e(1, 0)});
  const Element e1 = mono({Letter::e(1, 1)});

  {
    Scalar expect = Scalar(1) / (v_pow(-2 * ctx.cartan.r(1)) - Scalar(1));
    bool ok = engine.pair(e0, e0) == expect && engine.pair(e0, e1).is_zero();
    ok = ok && engine.pair(e0, mono({Letter::h(1, 1)})).is_zero();
    ok = ok && engine.pair(mono({Letter::h(1, 1)}), mono({Letter::h(1, 1)})) ==
                   pair_sym(SymElement::p({1}), SymElement::p({1})).stretched(ctx.cartan.r(1));
    put(out, "base-values", ok, "(E,E) = 1/(v_i^-2 - 1); mixed weights orthogonal");
  }

  if (ctx.cartan.r(1) == 1) {
    Element a = e1 * e0;  // E(1,1) E(1,0)
    Element b = e0 * e1;  // E(1,0) E(1,1)
    Scalar den = (v_pow(-2) - Scalar(1)) * (v_pow(-2) - Scalar(1));
    bool ok = engine.pair(a, a) == v_pow(-4) / den && engine.pair(b, a) == v_pow(-2) / den;
    ScalarMatrix g = gram({a, b}, {a, b}, ctx.cartan, ExecPolicy::Serial);
    ok = ok && matrix_rank(g) == 1;
    put(out, "length-two-gram", ok,
        "(E1E0,E1E0) = v^-4/(v^-2-1)^2, (E0E1,E1E0) = v^-2/(v^-2-1)^2, rank 1");
  }

  {
    bool ok = counit(Element::one()).is_one() && counit(e0).is_zero() &&
              counit(e0 + Element::one() * Scalar(7)) == Scalar(7);
    put(out, "counit", ok, "coefficient of the empty monomial");
  }

  {
    TensorElement expect;
    expect.add_term({Letter::e(1, 0)}, {}, Scalar(1));
    for (int t = 0; 0 - t >= ctx.window.dmin; ++t) {
      Word th = t > 0 ? Word{Letter::theta(1, t)} : Word{};
      expect.add_term(th, {Letter::e(1, -t)}, Scalar(1));
    }
    put(out, "coproduct-shape", coproduct(e0, ctx.cartan, ctx.window) == expect,
        "E(1,0) -> E ox 1 + sum_t theta_t ox E_{-t} down to the window floor");
  }

  {
    bool ok = true;
    size_t n = 0;
    auto words = window_words(ctx, 2);
    for (size_t a = 0; a < words.size() && ok; a += 7)
      for (size_t b = a; b < words.size() && ok; b += 11) {
        ok = engine.pair_words(words[a], words[b]) == engine.pair_words(words[b], words[a]);
        ++n;
      }
    put(out, "symmetry", ok, "(x,y) = (y,x) on " + std::to_string(n) + " sampled word pairs");
  }
  return out;
}

// ---------------------------------------------------------- fprime-lemmas --

Checks suite_fprime(const PairingContext& ctx) {
  Checks out;
  PairingEngine engine(ctx.cartan);
  const auto words = window_words(ctx, 2);

  {
    // Derived adjunction (x, F'_{i,n} y) = (v^-2 - 1)(E_{i,n} x, y); the
    // admissibility constant (1 - v_i^-2) quoted alongside the definition
    // differs by -v_i^-2 and does not match the computed pairing, so the
    // derived constant is asserted and the quoted one only reported.
    const Scalar cder = v_pow(-2) - Scalar(1);
    const Scalar cquote = Scalar(1) - v_pow(-2 * ctx.cartan.r(1));
    size_t checked = 0, derived_ok = 0, quoted_ok = 0;
    for (size_t a = 0; a < words.size(); a += 5)
      for (size_t b = 0; b < words.size(); b += 7) {
        Element x = Element::from_word(words[a]);
        Element y = Element::from_word(words[b]);
        Element ex = mono({Letter::e(1, 0)}) * x;
        Scalar lhs = engine.pair(x, engine.fprime(1, 0, y));
        Scalar rhs = engine.pair(ex, y);
        ++checked;
        if (lhs == cder * rhs) ++derived_ok;
        if (lhs == cquote * rhs) ++quoted_ok;
      }
    put(out, "adjunction-constant", derived_ok == checked,
        "(x,F'y) = (v^-2 - 1)(Ex,y) on " + std::to_string(checked) +
            " pairs; alternative constant (1 - v_i^-2) matched " + std::to_string(quoted_ok));
  }

  {
    // F'_{i,l+1} F'_{j,m} - v^{b_ij} F'_{j,m} F'_{i,l+1}
    //   = v^{b_ij} F'_{i,l} F'_{j,m+1} - F'_{j,m+1} F'_{i,l}   as operators.
    size_t checked = 0, failed = 0;
    std::vector<std::pair<int, int>> nodes;
    for (int i = 1; i <= ctx.cartan.rank(); ++i)
      for (int j = 1; j <= ctx.cartan.rank(); ++j) nodes.push_back({i, j});
    for (auto [i, j] : nodes) {
      Scalar vb = v_pow(ctx.cartan.b(i, j));
      for (auto [l, m] : std::vector<std::pair<int, int>>{{0, 0}, {-1, 1}, {1, 0}}) {
        for (const auto& w : words) {
          Element x = Element::from_word(w);
          Element lhs = engine.fprime(i, l + 1, engine.fprime(j, m, x)) -
                        vb * engine.fprime(j, m, engine.fprime(i, l + 1, x));
          Element rhs = vb * engine.fprime(i, l, engine.fprime(j, m + 1, x)) -
                        engine.fprime(j, m + 1, engine.fprime(i, l, x));
          ++checked;
          if (lhs != rhs) ++failed;
        }
      }
    }
    put(out, "quadratic-operator-identity", failed == 0,
        std::to_string(checked) + " operator evaluations, exact element equality");
  }

  if (ctx.cartan.rank() >= 2 && ctx.cartan.a(1, 2) == -1) {
    // Serre-type operator identity for r = 1 - a_ij = 2.
    const int i = 1, j = 2, r = 2;
    size_t checked = 0, failed = 0;
    for (auto [l1, l2, lp] : std::vector<std::array<int, 3>>{{0, 1, 0}, {0, 0, 1}}) {
      std::vector<std::array<int, 2>> perms = {{l1, l2}, {l2, l1}};
      for (const auto& w : words) {
        Element x = Element::from_word(w);
        Element acc;
        for (const auto& seq : perms) {
          for (int k = 0; k <= r; ++k) {
            // F'_{i,seq[0]} .. F'_{i,seq[k-1]} F'_{j,lp} F'_{i,seq[k]} ..
            Element y = x;
            for (int t = r - 1; t >= k; --t) y = engine.fprime(i, seq[t], y);
            y = engine.fprime(j, lp, y);
            for (int t = k - 1; t >= 0; --t) y = engine.fprime(i, seq[t], y);
            Scalar c = qbinom_node(r, k, ctx.cartan.r(i));
            if (k % 2 == 1) c = -c;
            acc += c * y;
          }
        }
        ++checked;
        if (!acc.is_zero()) ++failed;
      }
    }
    put(out, "serre-operator-identity", failed == 0,
        std::to_string(checked) + " operator evaluations, exact zero");
  }

  {
    // F'_{i,m} E_{j,n} - v^{-b_ij} E_{j,n} F'_{i,m}
    //   = delta delta + sum_{t>0} v^{-t b_ij}(v^{-b_ij} - v^{b_ij})
    //     E_{j,n-t} F'_{i,m-t}, on monomials whose truncation tail stays
    //     in-window.
    size_t checked = 0, failed = 0, skipped = 0;
    for (int i = 1; i <= ctx.cartan.rank(); ++i)
      for (int j = 1; j <= ctx.cartan.rank(); ++j) {
        int b = ctx.cartan.b(i, j);
        for (int m = -1; m <= 2; ++m)
          for (int n = -1; n <= 2; ++n)
            for (const auto& w : words) {
              Element x = Element::from_word(w);
              auto mind = min_node_degree(x, i);
              int tmax = mind ? m - *mind : 0;
              if (tmax > 0 && n - tmax < ctx.window.dmin) {
                ++skipped;
                continue;
              }
              Element ej = mono({Letter::e(j, n)});
              Element lhs = engine.fprime(i, m, ej * x) - v_pow(-b) * (ej * engine.fprime(i, m, x));
              Element rhs;
              if (i == j && m == n) rhs += x;
              for (int t = 1; t <= tmax; ++t) {
                Element tail = engine.fprime(i, m - t, x);
                if (tail.is_zero()) continue;
                rhs += (v_pow(-t * b) * (v_pow(-b) - v_pow(b))) * (mono({Letter::e(j, n - t)}) * tail);
              }
              ++checked;
              if (lhs != rhs) ++failed;
            }
      }
    put(out, "commutation-identity", failed == 0,
        std::to_string(checked) + " evaluations (" + std::to_string(skipped) +
            " out-of-window cases skipped), exact element equality");
  }
  return out;
}

// ----------------------------------------------------------------- qboson --

Checks suite_qboson(const PairingContext& ctx) {
  Checks out;
  PairingEngine engine(ctx.cartan);
  const int i = 1, n = 0;
  const int r = ctx.cartan.r(i);

  std::vector<Element> zs;
  for (const auto& w : window_words(ctx, 2)) {
    Element x = Element::from_word(w);
    if (!x.is_weight_homogeneous(ctx.cartan.rank())) continue;
    Element z = decompose_Z(i, n - 1, x, ctx, engine).z;
    if (!z.is_zero()) zs.push_back(z);
  }

  {
    size_t checked = 0, failed = 0, literal = 0;
    for (const auto& z : zs) {
      Element ez = mono({Letter::e(i, n)}) * z;
      Element diff = engine.fprime(i, n, ez) -
                     v_pow(-2 * r) * (mono({Letter::e(i, n)}) * engine.fprime(i, n, z)) - z;
      ++checked;
      if (diff.is_zero()) {
        ++literal;
      } else if (is_zero_windowed(diff, ctx, &engine).verdict != ZeroVerdict::PresumedZero) {
        ++failed;
      }
    }
    put(out, "qboson-relation", failed == 0,
        "F'E - v_i^-2 E F' = 1 on " + std::to_string(checked) + " Z'-projected elements (" +
            std::to_string(literal) + " literal)");
  }

  {
    size_t checked = 0, failed = 0;
    for (const auto& z : zs) {
      for (int s = 1; s <= 4; ++s) {
        Element lhs = engine.fprime(i, n, divided_power_E(i, n, s, z, ctx.cartan));
        Element rhs = v_pow(-2 * r * s) * divided_power_E(i, n, s, engine.fprime(i, n, z), ctx.cartan) +
                      v_pow(-r * (s - 1)) * divided_power_E(i, n, s - 1, z, ctx.cartan);
        Element diff = lhs - rhs;
        ++checked;
        if (!diff.is_zero() &&
            is_zero_windowed(diff, ctx, &engine).verdict != ZeroVerdict::PresumedZero)
          ++failed;
      }
      if (checked >= 40) break;
    }
    put(out, "divided-power-recursion", failed == 0,
        "F'E^{(s)} = v_i^{-2s} E^{(s)} F' + v_i^{-(s-1)} E^{(s-1)}, s <= 4, " +
            std::to_string(checked) + " cases");
  }

  if (r != 1)
    put(out, "note-stretching", true,
        "non-simply-laced node: identities read in the v_i = v^" + std::to_string(r) +
            " convention",
        false);
  return out;
}

// ------------------------------------------------------------- projectors --

Checks suite_projectors(const PairingContext& ctx) {
  Checks out;
  PairingEngine engine(ctx.cartan);
  const int i = 1, n = 0;
  const int r = ctx.cartan.r(i);

  {
    bool ok = pi_projector(i, n, 0, Element::one(), ctx, engine) == Element::one();
    ok = ok && pi_projector(i, n, 1, Element::one(), ctx, engine).is_zero();
    Element e = mono({Letter::e(i, n)});
    ok = ok && pi_projector(i, n, 0, e, ctx, engine, false).is_zero();
    ok = ok && pi_projector(i, n, 1, e, ctx, engine, false) == Element::one();
    put(out, "projector-base-cases", ok, "Pi_0(1) = 1, Pi_1(E) = 1, complementary values 0");
  }

  std::vector<Element> zs;
  for (const auto& w : window_words(ctx, 2)) {
    Element x = Element::from_word(w);
    if (!x.is_weight_homogeneous(ctx.cartan.rank())) continue;
    Element z = decompose_Z(i, n - 1, x, ctx, engine).z;
    if (!z.is_zero()) zs.push_back(z);
    if (zs.size() >= 12) break;
  }

  {
    size_t checked = 0, failed = 0;
    for (const auto& z : zs)
      for (int t = 0; t <= 3; ++t) {
        Element p = pi_projector(i, n, t, z, ctx, engine, false);
        if (p.is_zero()) continue;
        Element fp = engine.fprime(i, n, p);
        ++checked;
        if (!fp.is_zero() &&
            is_zero_windowed(fp, ctx, &engine).verdict != ZeroVerdict::PresumedZero)
          ++failed;
      }
    put(out, "fprime-kills-projection", failed == 0,
        "F' Pi_t = 0 for t <= 3 on " + std::to_string(checked) + " projected values");
  }

  {
    size_t checked = 0, failed = 0;
    for (const auto& z : zs) {
      Element acc;
      for (int t = 0; t <= 6; ++t) {
        Element p = pi_projector(i, n, t, z, ctx, engine, false);
        if (p.is_zero()) continue;
        acc += v_pow(r * t * (t - 1) / 2) * divided_power_E(i, n, t, p, ctx.cartan);
      }
      Element diff = acc - z;
      ++checked;
      if (!diff.is_zero() &&
          is_zero_windowed(diff, ctx, &engine).verdict != ZeroVerdict::PresumedZero)
        ++failed;
    }
    put(out, "projector-resolution", failed == 0,
        "sum_t v^{t(t-1)/2} E^{(t)} Pi_t = id on " + std::to_string(checked) + " elements");
  }

  {
    // E-multiplication injectivity: the Gram rank of {E u_k} equals the Gram
    // rank of {u_k} for a window weight family.
    Weight alpha(std::vector<int>(ctx.cartan.rank(), 0), 1);
    alpha.q[0] = 1;
    auto us = weight_monomials(alpha, ctx);
    std::vector<Element> base, image;
    for (const auto& u : us) {
      base.push_back(Element::from_word(u));
      image.push_back(mono({Letter::e(i, n)}) * Element::from_word(u));
    }
    int rank_base = matrix_rank(gram(base, base, ctx.cartan, ExecPolicy::Serial));
    int rank_image = matrix_rank(gram(image, image, ctx.cartan, ExecPolicy::Serial));
    put(out, "e-multiplication-injective", rank_base == rank_image,
        "Gram rank " + std::to_string(rank_base) + " preserved under left E-multiplication");
  }
  return out;
}

// -------------------------------------------------------------- kashiwara --

Checks suite_kashiwara(const PairingContext& ctx) {
  Checks out;
  Coordinatizer coord(ctx);
  PairingEngine& engine = coord.engine();

  {
    bool ok = true;
    for (int n = std::max(ctx.window.dmin, -1); n <= std::min(ctx.window.dmax, 1) && ok; ++n) {
      ok = kashiwara_E(1, n, Element::one(), ctx, engine) == mono({Letter::e(1, n)});
      ok = ok && kashiwara_F(1, n, mono({Letter::e(1, n)}), ctx, engine) == Element::one();
    }
    put(out, "unit-string", ok, "E~(1) = E(i,n) and F~(E(i,n)) = 1 across window degrees");
  }

  {
    Element e2 = kashiwara_E(1, 0, mono({Letter::e(1, 0)}), ctx, engine);
    bool ok = e2 == divided_power_E(1, 0, 2, Element::one(), ctx.cartan);
    put(out, "divided-power-step", ok, "E~_{1,0}(E(1,0)) = E^{(2)}(1,0)");
  }

  {
    Element x = mono({Letter::e(1, 1)});
    Element lhs = kashiwara_E(1, 0, x, ctx, engine);
    Element rhs = mono({Letter::e(1, 0), Letter::e(1, 1)});
    bool ok = coord.coords(lhs) == coord.coords(rhs);
    Element gone = kashiwara_E(1, 1, mono({Letter::e(1, 0)}), ctx, engine);
    ok = ok && gone.is_zero();
    put(out, "string-degree-sensitivity", ok,
        "E~_{1,0}(E(1,1)) = E(1,0)E(1,1); E~_{1,1}(E(1,0)) = 0 (W' part discarded)");
  }

  {
    Element x = mono({Letter::e(1, 1), Letter::h(1, 1)});
    Element lhs = kashiwara_E(1, 0, x, ctx, engine);
    Element rhs = kashiwara_E(1, 0, mono({Letter::e(1, 1)}), ctx, engine) *
                  mono({Letter::h(1, 1)});
    put(out, "h-tail-passthrough", coord.coords(lhs) == coord.coords(rhs),
        "E~(y h) = E~(y) h for an H tail");
  }

  {
    // F~ E~ = id on nonzero E~ images of short E~-words applied to 1.
    std::vector<Element> layer{Element::one()};
    size_t checked = 0, failed = 0;
    for (int depth = 0; depth < 2; ++depth) {
      std::vector<Element> next;
      for (const auto& y : layer)
        for (int i = 1; i <= ctx.cartan.rank(); ++i)
          for (int n = ctx.window.dmin; n <= ctx.window.dmax; ++n) {
            Element ey = kashiwara_E(i, n, y, ctx, engine);
            if (ey.is_zero()) continue;
            Element back = kashiwara_F(i, n, ey, ctx, engine);
            ++checked;
            if (coord.coords(back) != coord.coords(y)) ++failed;
            next.push_back(ey);
          }
      layer = std::move(next);
    }
    put(out, "left-inverse", failed == 0,
        "F~E~ = id on " + std::to_string(checked) + " nonzero images, depth <= 2");
  }
  return out;
}

// -------------------------------------------------------------------- bar --

Checks suite_bar(const PairingContext& ctx) {
  Checks out;
  PairingEngine engine(ctx.cartan);

  {
    // Leading truncation terms of phi(E_{1,l}); needs l-1 inside the window.
    int l = std::max(std::min(1, ctx.window.dmax), ctx.window.dmin + 1);
    Element b = bar_generator(1, l, ctx, 0);
    Scalar c1 = b.coeff(canonical_word({Letter::e(1, l - 1), Letter::xi(1, 1)}));
    bool ok = b.coeff({Letter::e(1, l)}).is_one() && c1 == -(v_pow(-1) - v_pow(1));
    put(out, "generator-expansion", ok,
        "phi(E_l) = E_l - (v^-1 - v) E_{l-1} xi_1 - ... (window truncated)");
  }

  {
    size_t checked = 0, failed = 0, literal = 0;
    int lo = std::max(0, ctx.window.dmin), hi = std::min(3, ctx.window.dmax);
    JetEngine je(ctx);
    for (int l = lo; l <= hi; ++l) {
      Element e = mono({Letter::e(1, l)});
      Element bb = bar_element(bar_element(e, ctx), ctx);
      Element diff = bb - e;
      ++checked;
      if (diff.is_zero()) {
        ++literal;
        continue;
      }
      // Fall back to the jet criterion below the weight's own slope.
      Element nd = normal_order_H(diff, ctx.cartan);
      if (nd.is_zero()) continue;
      Jet j = je.jet(nd, mpq_class(l - 1));
      if (!j.value.is_zero()) ++failed;
    }
    put(out, "double-bar-identity", failed == 0,
        "phi(phi(E_{1,l})) = E_{1,l}, l in [" + std::to_string(lo) + "," + std::to_string(hi) +
            "] (" + std::to_string(literal) + " literal)");
  }

  {
    size_t checked = 0, failed = 0;
    for (auto [l, m] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {-1, 1}}) {
      if (l < ctx.window.dmin || l + 1 > ctx.window.dmax) continue;
      Element res = quadratic_residual(1, 1, l, m, ctx.cartan);
      Element b = bar_element(res, ctx);
      ++checked;
      if (is_zero_windowed(b, ctx, &engine).verdict != ZeroVerdict::PresumedZero) ++failed;
    }
    put(out, "bar-respects-relations", failed == 0,
        "phi(quadratic residual) PresumedZero on " + std::to_string(checked) + " instances");
  }

  {
    // phi(E_i(z)) theta_i^+(z) = E_i(z), coefficient of z^l for window l.
    size_t checked = 0, failed = 0;
    for (int l = ctx.window.dmin; l <= ctx.window.dmax; ++l) {
      Element acc;
      for (int t = 0; t <= l - ctx.window.dmin; ++t) {
        Element th = t == 0 ? Element::one() : mono({Letter::theta(1, t)});
        acc += bar_generator(1, l - t, ctx, t) * th;
      }
      Element diff = normal_order_H(acc - mono({Letter::e(1, l)}), ctx.cartan);
      Element projected;
      for (const auto& [w, c] : diff.terms()) {
        bool in_window = true;
        for (const auto& let : w)
          if (let.kind == LetterKind::E && let.degree < ctx.window.dmin) in_window = false;
        if (in_window) projected.add_term(w, c);
      }
      ++checked;
      if (!projected.is_zero()) ++failed;
    }
    put(out, "currents-identity", failed == 0,
        "phi(E(z)) theta^+(z) = E(z) coefficient-wise at " + std::to_string(checked) +
            " window degrees");
  }
  return out;
}

// ------------------------------------------------------------------- jets --

Checks suite_jets(const PairingContext& ctx) {
  Checks out;
  JetEngine je(ctx);
  PairingEngine engine(ctx.cartan);

  {
    bool ok = !slope(Weight({0, 0}, 3)).has_value() && !slope(Weight::zero(2)).has_value();
    ok = ok && slope(Weight({1, 2}, 3)) == std::optional<mpq_class>(mpq_class(1));
    ok = ok && slope(Weight({1}, -2)) == std::optional<mpq_class>(mpq_class(-2));
    put(out, "slope-values", ok, "mu(alpha) = d/|alpha_0|, +infinity when the Q-part vanishes");
  }

  std::vector<Element> samples;
  {
    std::vector<Word> ws = {{Letter::e(1, 1), Letter::e(1, 0)},
                            {Letter::e(1, 0), Letter::e(1, 1)},
                            {Letter::e(1, 2), Letter::e(1, 0)},
                            {Letter::e(1, 1), Letter::e(1, 1)},
                            {Letter::e(1, 2), Letter::e(1, 1), Letter::e(1, 0)}};
    for (auto& w : ws) {
      bool in_window = true;
      for (const auto& l : w) in_window = in_window && ctx.window.contains(l.degree);
      if (in_window) samples.push_back(Element::from_word(w));
    }
  }

  {
    size_t checked = 0, failed = 0;
    for (const auto& x : samples)
      for (const mpq_class& m : {mpq_class(0), mpq_class(1), mpq_class(1, 2)}) {
        Jet j = je.jet(x, m);
        Jet jj = je.jet(j.value, m);
        Element rm = je.r_m(x, m);
        ++checked;
        if (jj.value != j.value || !je.jet(rm, m).value.is_zero() || rm + j.value != x) ++failed;
      }
    put(out, "jet-idempotence", failed == 0,
        "jet o jet = jet and jet(r_m(x)) = 0 on " + std::to_string(checked) + " cases");
  }

  {
    bool ok = true;
    Weight alpha({2}, 2);
    if (ctx.cartan.rank() == 1) {
      auto w0 = w_filtration_span(alpha, mpq_class(0), ctx);
      auto w1 = w_filtration_span(alpha, mpq_class(1), ctx);
      ok = w0.size() <= w1.size();
    }
    put(out, "filtration-monotone", ok, "W_0[alpha] family no larger than W_1[alpha]");
  }

  {
    size_t checked = 0, failed = 0;
    mpq_class n(1);
    for (const auto& x : samples) {
      Element one = Element::one();
      Jet ja = je.jet(one, n);
      Jet jb = je.jet(x, n);
      Jet prod = je.multiply(ja, jb, n);
      ++checked;
      if (prod.value != je.jet(x, n).value) ++failed;
    }
    put(out, "unit-jet", failed == 0, "jet(1) is a multiplicative unit at level 1");
  }

  {
    size_t checked = 0, failed = 0;
    mpq_class n(1);
    for (size_t a = 0; a < samples.size(); ++a)
      for (size_t b = 0; b < samples.size(); ++b) {
        const Element& xa = samples[a];
        const Element& xb = samples[b];
        long qa = xa.weight(ctx.cartan.rank()).qsum();
        mpq_class pad = n - qa;
        Jet ja = je.jet(xa, n);
        Jet jb = je.jet(xb, pad);
        Jet jb_deep = je.jet(xb, pad - 1);
        Jet p1 = je.multiply(ja, jb, n);
        Jet p2 = je.multiply(ja, jb_deep, n);
        Jet direct = je.jet(xa * xb, n);
        ++checked;
        if (p1.value != direct.value || p2.value != direct.value) ++failed;
      }
    put(out, "padding-stability", failed == 0,
        "jet products at minimal and deeper padding agree with jet(xy) on " +
            std::to_string(checked) + " pairs");
  }
  return out;
}

// -------------------------------------------------------------------- pbw --

/// Non-increasing degree sequences over [lo,hi] of length <= maxlen,
/// written as (degree, multiplicity) runs with strictly decreasing degrees.
void pbw_sequences(int lo, int hi, int maxlen, std::vector<std::vector<std::pair<int, int>>>& out) {
  out.push_back({});
  std::vector<std::pair<int, int>> cur;
  // Depth-first over strictly decreasing run degrees.
  std::function<void(int, int)> rec = [&](int maxdeg, int room) {
    for (int d = maxdeg; d >= lo; --d)
      for (int s = 1; s <= room; ++s) {
        cur.push_back({d, s});
        out.push_back(cur);
        if (room - s > 0 && d > lo) rec(d - 1, room - s);
        cur.pop_back();
      }
  };
  rec(hi, maxlen);
}

Element pbw_element(const std::vector<std::pair<int, int>>& runs, const Partition& lam,
                    const CartanData& cartan) {
  Element acc = lam.empty() ? Element::one() : mono({Letter::schur_b(1, lam)});
  for (auto it = runs.rbegin(); it != runs.rend(); ++it)
    acc = divided_power_E(1, it->first, it->second, acc, cartan);
  return acc;
}

Checks suite_pbw(const PairingContext& ctx) {
  Checks out;
  if (ctx.cartan.rank() != 1) {
    put(out, "rank-restriction", true, "PBW suite is rank-1 only; skipped");
    return out;
  }
  const int lo = 0, hi = 2, maxe = 2;

  std::vector<std::vector<std::pair<int, int>>> seqs;
  pbw_sequences(lo, hi, maxe, seqs);

  {
    // Straightening oracle: straightening every raw word over the degree
    // range reaches exactly the non-increasing monomials.
    std::set<std::vector<int>> reached;
    std::vector<std::vector<int>> raw{{}};
    for (int len = 1; len <= maxe; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : raw)
        if (static_cast<int>(w.size()) == len - 1)
          for (int d = lo; d <= hi; ++d) {
            auto e = w;
            e.push_back(d);
            next.push_back(e);
          }
      for (const auto& w : next) {
        Word word;
        for (int d : w) word.push_back(Letter::e(1, d));
        Element s = straighten_rank1(Element::from_word(word), ctx.cartan);
        for (const auto& [sw, c] : s.terms()) {
          std::vector<int> degs;
          for (const auto& l : sw) degs.push_back(l.degree);
          reached.insert(degs);
        }
      }
      raw.insert(raw.end(), next.begin(), next.end());
    }
    reached.insert({});
    std::set<std::vector<int>> enumerated;
    for (const auto& runs : seqs) {
      std::vector<int> degs;
      for (auto [d, s] : runs)
        for (int k = 0; k < s; ++k) degs.push_back(d);
      enumerated.insert(degs);
    }
    put(out, "straightening-oracle", reached == enumerated,
        std::to_string(enumerated.size()) + " non-increasing monomials reached exactly");
  }

  {
    std::vector<Partition> lams = {{}, {1}, {2}, {1, 1}};
    std::vector<Element> family;
    for (const auto& runs : seqs)
      for (const auto& lam : lams) family.push_back(pbw_element(runs, lam, ctx.cartan));

    // Group by weight; the Gram form is block diagonal across weights.
    std::map<Weight, std::vector<Element>> blocks;
    for (const auto& x : family) blocks[x.weight(1)].push_back(x);
    int total_rank = 0;
    size_t expected = family.size();
    for (const auto& [alpha, block] : blocks)
      total_rank += matrix_rank(gram(block, block, ctx.cartan, ExecPolicy::Serial));
    put(out, "gram-rank-equals-count", total_rank == static_cast<int>(expected),
        "Gram rank " + std::to_string(total_rank) + " of " + std::to_string(expected) +
            " divided-power monomials with Schur tails");
  }
  return out;
}

// ---------------------------------------------------------------- crystal --

Checks suite_crystal(const PairingContext& ctx) {
  Checks out;
  const int depth = 2;
  std::string rep1 = crystal_report(depth, ctx);
  std::string rep2 = crystal_report(depth, ctx);
  put(out, "report-deterministic", rep1 == rep2, "two runs byte-identical");

  auto grade_of = [&](int item) -> std::string {
    std::string key = "ITEM " + std::to_string(item) + " ";
    size_t p = rep1.find(key);
    if (p == std::string::npos) return "MISSING";
    size_t start = p + key.size();
    size_t end = rep1.find(' ', start);
    return rep1.substr(start, end - start);
  };

  for (int item : {1, 2, 6, 7}) {
    std::string g = grade_of(item);
    put(out, "item-" + std::to_string(item), g == "PASS", "grade " + g);
  }
  for (int item : {3, 4, 5}) {
    std::string g = grade_of(item);
    put(out, "item-" + std::to_string(item) + "-conjectural", g != "MISSING", "grade " + g, true);
  }
  return out;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const PairingContext& ctx) {
  SuiteReport rep;
  rep.suite = name;
  Checks (*fn)(const PairingContext&) = nullptr;
  if (name == "scalars") fn = suite_scalars;
  else if (name == "symfunc") fn = suite_symfunc;
  else if (name == "relations") fn = suite_relations;
  else if (name == "pairing") fn = suite_pairing;
  else if (name == "fprime-lemmas") fn = suite_fprime;
  else if (name == "qboson") fn = suite_qboson;
  else if (name == "projectors") fn = suite_projectors;
  else if (name == "kashiwara") fn = suite_kashiwara;
  else if (name == "bar") fn = suite_bar;
  else if (name == "jets") fn = suite_jets;
  else if (name == "pbw") fn = suite_pbw;
  else if (name == "crystal") fn = suite_crystal;
  else throw ParseError("unknown suite: " + name);

  try {
    rep.checks = fn(ctx);
  } catch (const std::exception& e) {
    rep.checks.push_back(CheckResult{"suite-exception", false, false, e.what()});
  }
  return rep;
}

std::string format_report(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << "CHECK " << r.suite << "/" << c.name << " " << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) os << " " << c.detail;
    if (c.conjectural) os << " [conjectural]";
    os << "\n";
  }
  return os.str();
}

}  // namespace qloop
