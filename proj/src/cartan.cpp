#include "qloop/cartan.hpp"

#include <sstream>

#include "qloop/error.hpp"

namespace qloop {

Weight& Weight::operator+=(const Weight& o) {
  if (q.size() != o.q.size()) throw DomainError("weight rank mismatch");
  for (size_t i = 0; i < q.size(); ++i) q[i] += o.q[i];
  d += o.d;
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (q.size() != o.q.size()) throw DomainError("weight rank mismatch");
  for (size_t i = 0; i < q.size(); ++i) q[i] -= o.q[i];
  d -= o.d;
  return *this;
}

bool Weight::q_is_zero() const {
  for (int x : q)
    if (x != 0) return false;
  return true;
}

int Weight::qsum() const {
  int s = 0;
  for (int x : q) s += x;
  return s;
}

bool Weight::q_below(const Weight& o) const {
  if (q.size() != o.q.size()) throw DomainError("weight rank mismatch");
  for (size_t i = 0; i < q.size(); ++i)
    if (q[i] > o.q[i]) return false;
  return true;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < q.size(); ++i) {
    if (i) os << " ";
    os << q[i];
  }
  os << ", " << d << ")";
  return os.str();
}

CartanData::CartanData(std::vector<std::vector<int>> a, std::vector<int> sym)
    : a_(std::move(a)), sym_(std::move(sym)) {
  size_t n = sym_.size();
  if (n == 0) throw DomainError("Cartan rank must be positive");
  if (a_.size() != n) throw DomainError("Cartan matrix size mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (a_[i].size() != n) throw DomainError("Cartan matrix row size mismatch");
    if (a_[i][i] != 2) throw DomainError("Cartan diagonal entries must equal 2");
    if (sym_[i] < 1) throw DomainError("symmetrizers must be positive");
    for (size_t j = 0; j < n; ++j) {
      if (i != j && a_[i][j] > 0) throw DomainError("off-diagonal Cartan entries must be <= 0");
      if ((a_[i][j] == 0) != (a_[j][i] == 0))
        throw DomainError("Cartan matrix zero pattern must be symmetric");
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (sym_[i] * a_[i][j] != sym_[j] * a_[j][i])
        throw DomainError("symmetrizers do not symmetrize the Cartan matrix");
}

CartanData CartanData::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string keyword;
  int rank = -1;
  std::vector<std::vector<int>> rows;
  std::vector<int> sym;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!(ls >> keyword)) continue;  // blank line
    if (keyword == "rank") {
      if (rank != -1) throw ParseError("duplicate rank line");
      if (!(ls >> rank) || rank < 1) throw ParseError("invalid rank");
    } else if (keyword == "row") {
      if (rank == -1) throw ParseError("row before rank");
      std::vector<int> row;
      int x;
      while (ls >> x) row.push_back(x);
      if (static_cast<int>(row.size()) != rank) throw ParseError("row length != rank");
      rows.push_back(std::move(row));
    } else if (keyword == "sym") {
      if (rank == -1) throw ParseError("sym before rank");
      int x;
      while (ls >> x) sym.push_back(x);
      if (static_cast<int>(sym.size()) != rank) throw ParseError("sym length != rank");
    } else {
      throw ParseError("unknown Cartan config keyword: " + keyword);
    }
    std::string trailing;
    if (ls >> trailing) throw ParseError("trailing tokens on config line");
  }
  if (rank == -1) throw ParseError("missing rank line");
  if (static_cast<int>(rows.size()) != rank) throw ParseError("expected one row line per node");
  if (sym.empty()) throw ParseError("missing sym line");
  try {
    return CartanData(std::move(rows), std::move(sym));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

CartanData CartanData::sl2() { return CartanData({{2}}, {1}); }

CartanData CartanData::a2() { return CartanData({{2, -1}, {-1, 2}}, {1, 1}); }

long CartanData::bilinear(const Weight& x, const Weight& y) const {
  int n = rank();
  if (static_cast<int>(x.q.size()) != n || static_cast<int>(y.q.size()) != n)
    throw DomainError("weight rank mismatch");
  long acc = 0;
  for (int i = 0; i < n; ++i) {
    if (x.q[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      acc += static_cast<long>(x.q[i]) * b(i + 1, j + 1) * y.q[j];
  }
  return acc;
}

Window::Window(int lo, int hi) : dmin(lo), dmax(hi) {
  if (lo > hi) throw DomainError("empty degree window");
}

std::string Window::str() const {
  return "[" + std::to_string(dmin) + "," + std::to_string(dmax) + "]";
}

}  // namespace qloop
