#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qloop {

/// Element of the extended weight lattice: nonnegative root coordinates
/// plus a loop degree.
struct Weight {
  std::vector<int> q;  // coordinate i-1 counts the simple root alpha_i
  long d = 0;

  Weight() = default;
  Weight(std::vector<int> q_, long d_) : q(std::move(q_)), d(d_) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0), 0); }

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }

  bool q_is_zero() const;
  /// Sum of the root coordinates (the height of the Q-part).
  int qsum() const;
  /// Componentwise q <= o.q (loop degrees unconstrained).
  bool q_below(const Weight& o) const;

  std::string str() const;
};

/// Symmetrizable Cartan datum: integer matrix A with a_ii = 2 and
/// a_ij <= 0 off the diagonal, plus positive symmetrizers r_i making
/// B = diag(r) * A symmetric.
class CartanData {
public:
  CartanData(std::vector<std::vector<int>> a, std::vector<int> sym);

  /// Text form:
  ///   rank 2
  ///   row 2 -1
  ///   row -1 2
  ///   sym 1 1
  static CartanData parse(std::string_view text);

  static CartanData sl2();
  static CartanData a2();

  int rank() const { return static_cast<int>(sym_.size()); }
  /// Entries below are 1-based in the node index.
  int a(int i, int j) const { return a_[i - 1][j - 1]; }
  int r(int i) const { return sym_[i - 1]; }
  int b(int i, int j) const { return sym_[i - 1] * a_[i - 1][j - 1]; }

  /// Symmetric bilinear form on Q-parts: sum_ij x_i b(i,j) y_j.
  long bilinear(const Weight& x, const Weight& y) const;

private:
  std::vector<std::vector<int>> a_;
  std::vector<int> sym_;
};

/// Inclusive loop-degree window for E-letters.
struct Window {
  int dmin;
  int dmax;
  Window(int lo, int hi);
  bool contains(int n) const { return dmin <= n && n <= dmax; }
  int size() const { return dmax - dmin + 1; }
  std::string str() const;
};

}  // namespace qloop
