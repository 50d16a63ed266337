#include "qloop/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "qloop/error.hpp"

namespace qloop {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partition_weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

const std::vector<Partition>& partitions_of(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  if (d < 0) throw DomainError("partitions of a negative integer");
  std::scoped_lock lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(d, d == 0 ? 1 : d);
  return cache.emplace(d, std::move(out)).first->second;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  os << "]";
  return os.str();
}

SymElement SymElement::one() {
  SymElement r;
  r.c_[Partition{}] = Scalar(1);
  return r;
}

SymElement SymElement::p(int s) {
  if (s < 1) throw DomainError("power sum index must be >= 1");
  SymElement r;
  r.c_[Partition{s}] = Scalar(1);
  return r;
}

SymElement SymElement::p(const Partition& lambda) {
  if (!is_partition(lambda)) throw DomainError("invalid partition");
  SymElement r;
  r.c_[lambda] = Scalar(1);
  return r;
}

Scalar SymElement::coeff(const Partition& lambda) const {
  auto it = c_.find(lambda);
  return it == c_.end() ? Scalar() : it->second;
}

void SymElement::add_term(const Partition& lambda, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = c_.find(lambda);
  if (it == c_.end()) {
    c_.emplace(lambda, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) c_.erase(it);
  }
}

SymElement& SymElement::operator+=(const SymElement& o) {
  for (const auto& [l, s] : o.c_) add_term(l, s);
  return *this;
}

SymElement& SymElement::operator-=(const SymElement& o) {
  for (const auto& [l, s] : o.c_) add_term(l, -s);
  return *this;
}

SymElement& SymElement::operator*=(const SymElement& o) {
  std::map<Partition, Scalar> out;
  for (const auto& [la, sa] : c_) {
    for (const auto& [lb, sb] : o.c_) {
      Partition merged = la;
      merged.insert(merged.end(), lb.begin(), lb.end());
      std::sort(merged.begin(), merged.end(), std::greater<int>());
      Scalar p = sa * sb;
      if (p.is_zero()) continue;
      auto it = out.find(merged);
      if (it == out.end()) {
        out.emplace(std::move(merged), std::move(p));
      } else {
        it->second += p;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  c_ = std::move(out);
  return *this;
}

SymElement& SymElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [l, c] : c_) c *= s;
  return *this;
}

namespace {

// Coefficients of exp(sum_{s>=1} g_s z^s) via s*c_s = sum_{r=1}^s r g_r c_{s-r}.
const SymElement& series_coeff(int s, std::vector<SymElement>& cache, std::mutex& mu,
                               const std::function<SymElement(int)>& g) {
  if (s < 0) throw DomainError("series coefficient of negative degree");
  std::scoped_lock lock(mu);
  if (cache.empty()) cache.push_back(SymElement::one());
  while (static_cast<int>(cache.size()) <= s) {
    int n = static_cast<int>(cache.size());
    SymElement acc;
    for (int r = 1; r <= n; ++r) {
      SymElement t = g(r) * cache[n - r];
      t *= Scalar(r);
      acc += t;
    }
    acc *= Scalar(1) / Scalar(n);
    cache.push_back(std::move(acc));
  }
  return cache[s];
}

}  // namespace

const SymElement& xi_coeff(int s) {
  static std::mutex mu;
  static std::vector<SymElement> cache;
  static const std::function<SymElement(int)> g = [](int r) {
    return SymElement::p(r) * (Scalar(1) / qint(r));
  };
  return series_coeff(s, cache, mu, g);
}

const SymElement& chi_coeff(int s) {
  static std::mutex mu;
  static std::vector<SymElement> cache;
  static const std::function<SymElement(int)> g = [](int r) {
    return SymElement::p(r) * (Scalar(-1) / qint(r));
  };
  return series_coeff(s, cache, mu, g);
}

const SymElement& theta_coeff(int s) {
  static std::mutex mu;
  static std::vector<SymElement> cache;
  static const std::function<SymElement(int)> g = [](int r) {
    return SymElement::p(r) * Scalar(Laurent::v(-1) - Laurent::v(1));
  };
  return series_coeff(s, cache, mu, g);
}

SymElement schur(const Partition& lambda) {
  if (!is_partition(lambda)) throw DomainError("invalid partition");
  size_t l = lambda.size();
  if (l == 0) return SymElement::one();
  // Expand det(xi_{lambda_i - i + j}) over permutations; sizes stay tiny.
  std::vector<size_t> perm(l);
  for (size_t i = 0; i < l; ++i) perm[i] = i;
  SymElement det;
  do {
    int inv = 0;
    for (size_t i = 0; i < l; ++i)
      for (size_t j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) ++inv;
    SymElement term = SymElement::one();
    bool zero = false;
    for (size_t i = 0; i < l && !zero; ++i) {
      int idx = lambda[i] - static_cast<int>(i) + static_cast<int>(perm[i]);
      if (idx < 0) {
        zero = true;
      } else {
        term *= xi_coeff(idx);
      }
    }
    if (!zero) {
      term *= Scalar(inv % 2 == 0 ? 1 : -1);
      det += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Scalar pair_sym(const SymElement& a, const SymElement& b) {
  static std::mutex mu;
  static std::map<Partition, Scalar> norm_cache;
  Scalar total;
  for (const auto& [lam, ca] : a.terms()) {
    Scalar cb = b.coeff(lam);
    if (cb.is_zero()) continue;
    Scalar norm;
    {
      std::scoped_lock lock(mu);
      auto it = norm_cache.find(lam);
      if (it == norm_cache.end()) {
        Scalar z(1);
        Scalar vinv_minus_v(Laurent::v(-1) - Laurent::v(1));
        int run = 0;
        for (size_t i = 0; i < lam.size(); ++i) {
          int m = lam[i];
          z *= qint(2 * m) / (Scalar(m) * vinv_minus_v);
          run = (i > 0 && lam[i] == lam[i - 1]) ? run + 1 : 1;
          z *= Scalar(run);
        }
        it = norm_cache.emplace(lam, std::move(z)).first;
      }
      norm = it->second;
    }
    total += ca * cb * norm;
  }
  return total;
}

namespace {

struct DegreeTables {
  std::vector<Partition> parts;            // partitions of d, fixed order
  std::vector<std::vector<Scalar>> xi_inv;     // p-coords -> xi-coords
  std::vector<std::vector<Scalar>> schur_inv;  // p-coords -> schur-coords
};

// Invert the column matrix of basis elements expressed in the p basis.
std::vector<std::vector<Scalar>> invert_basis(const std::vector<Partition>& parts,
                                              const std::vector<SymElement>& basis) {
  size_t n = parts.size();
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(2 * n));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) m[i][j] = basis[j].coeff(parts[i]);
  for (size_t i = 0; i < n; ++i) m[i][n + i] = Scalar(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw DomainError("singular basis transition matrix");
    std::swap(m[piv], m[col]);
    Scalar d = m[col][col];
    for (auto& x : m[col]) x /= d;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (size_t c = col; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

const DegreeTables& degree_tables(int d) {
  static std::mutex mu;
  static std::map<int, DegreeTables> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  DegreeTables t;
  t.parts = partitions_of(d);
  size_t n = t.parts.size();
  std::vector<SymElement> xis(n), schurs(n);
  for (size_t j = 0; j < n; ++j) {
    xis[j] = xi_monomial(t.parts[j]);
    schurs[j] = schur(t.parts[j]);
  }
  t.xi_inv = invert_basis(t.parts, xis);
  t.schur_inv = invert_basis(t.parts, schurs);
  return cache.emplace(d, std::move(t)).first->second;
}

std::map<Partition, Scalar> convert(const SymElement& x, bool to_schur) {
  // Split by homogeneous degree, convert each block.
  std::map<int, std::map<Partition, Scalar>> by_deg;
  for (const auto& [lam, c] : x.terms()) by_deg[partition_weight(lam)][lam] = c;
  std::map<Partition, Scalar> out;
  for (const auto& [d, block] : by_deg) {
    const DegreeTables& t = degree_tables(d);
    const auto& inv = to_schur ? t.schur_inv : t.xi_inv;
    size_t n = t.parts.size();
    std::vector<Scalar> pc(n);
    for (size_t i = 0; i < n; ++i) {
      auto it = block.find(t.parts[i]);
      if (it != block.end()) pc[i] = it->second;
    }
    for (size_t i = 0; i < n; ++i) {
      Scalar acc;
      for (size_t j = 0; j < n; ++j)
        if (!pc[j].is_zero()) acc += inv[i][j] * pc[j];
      if (!acc.is_zero()) out[t.parts[i]] = acc;
    }
  }
  return out;
}

}  // namespace

SymElement xi_monomial(const Partition& lambda) {
  SymElement r = SymElement::one();
  for (int part : lambda) r *= xi_coeff(part);
  return r;
}

std::map<Partition, Scalar> to_xi_basis(const SymElement& x) { return convert(x, false); }

std::map<Partition, Scalar> to_schur_basis(const SymElement& x) { return convert(x, true); }

SymElement bar_sym(const SymElement& x) {
  SymElement out;
  for (const auto& [lam, c] : to_xi_basis(x)) {
    SymElement t = xi_monomial(lam);
    t *= c.bar();
    out += t;
  }
  return out;
}

}  // namespace qloop
