#include "qloop/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qloop/error.hpp"
#include "qloop/symfunc.hpp"

namespace qloop {
namespace {

class Cursor {
public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eof() {
    skip_ws();
    return p_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return p_ < s_.size() ? s_[p_] : '\0';
  }
  char get() { return s_[p_++]; }
  bool try_char(char c) {
    if (peek() == c) {
      ++p_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_char(c)) fail(std::string("expected '") + c + "'");
  }
  size_t pos() const { return p_; }
  void seek(size_t p) { p_ = p; }
  bool match_keyword(const char* kw) {
    skip_ws();
    size_t n = 0;
    while (kw[n] != '\0') ++n;
    if (s_.compare(p_, n, kw) != 0) return false;
    p_ += n;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(p_));
  }

private:
  const std::string& s_;
  size_t p_ = 0;
};

// Word letters start with one of these; scalar atoms start with a digit,
// '(', 'v' or '-', so the two alphabets are disjoint.
bool gen_starts(Cursor& c) {
  char ch = c.peek();
  return ch == 'E' || ch == 'H' || ch == 'x' || ch == 'c' || ch == 't' || ch == 'b';
}

long parse_int(Cursor& c) {
  c.skip_ws();
  bool neg = c.try_char('-');
  if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected an integer");
  long val = 0;
  bool overflow = false;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    int d = c.get() - '0';
    if (val > (std::numeric_limits<long>::max() - d) / 10) overflow = true;
    if (!overflow) val = val * 10 + d;
  }
  if (overflow) c.fail("integer out of range");
  return neg ? -val : val;
}

BigInt parse_bigint(Cursor& c) {
  c.skip_ws();
  std::string digits;
  if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a number");
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) digits += c.get();
  return BigInt(digits);
}

Scalar parse_expr(Cursor& c);

Scalar parse_atom(Cursor& c) {
  char ch = c.peek();
  if (ch == '(') {
    c.get();
    Scalar s = parse_expr(c);
    c.expect(')');
    return s;
  }
  if (ch == 'v') {
    c.get();
    return Scalar::v(1);
  }
  if (std::isdigit(static_cast<unsigned char>(ch))) return Scalar(parse_bigint(c));
  c.fail("expected a scalar");
}

// Unary minus binds looser than '^': -v^2 is -(v^2).
Scalar parse_pow(Cursor& c) {
  if (c.try_char('-')) return -parse_pow(c);
  Scalar base = parse_atom(c);
  if (!c.try_char('^')) return base;
  long k = parse_int(c);
  if (k == 0) return Scalar(1);
  Scalar acc(1);
  long n = k < 0 ? -k : k;
  for (long t = 0; t < n; ++t) acc *= base;
  return k < 0 ? Scalar(1) / acc : acc;
}

// Multiplicative level.  A '*' followed by a generator letter belongs to the
// enclosing term (coefficient * word), so stop there without consuming it.
Scalar parse_mul(Cursor& c) {
  Scalar acc = parse_pow(c);
  while (true) {
    size_t mark = c.pos();
    if (c.try_char('*')) {
      if (gen_starts(c)) {
        c.seek(mark);
        return acc;
      }
      acc *= parse_pow(c);
    } else if (c.try_char('/')) {
      Scalar d = parse_pow(c);
      if (d.is_zero()) c.fail("division by zero");
      acc /= d;
    } else {
      return acc;
    }
  }
}

Scalar parse_expr(Cursor& c) {
  Scalar acc = parse_mul(c);
  while (true) {
    // Binary +/- inside a scalar only occurs within parentheses; at the top
    // level of an element the caller owns the separators.  The callers ensure
    // this by invoking parse_expr only for full scalar strings or inside '('.
    if (c.try_char('+')) {
      acc += parse_mul(c);
    } else if (c.try_char('-')) {
      acc -= parse_mul(c);
    } else {
      return acc;
    }
  }
}

// Scalar level used inside an element: no top-level +/- (those separate
// terms), only products, quotients and powers.
Scalar parse_term_scalar(Cursor& c) { return parse_mul(c); }

Partition parse_partition(Cursor& c) {
  c.expect('[');
  Partition parts;
  if (!c.try_char(']')) {
    while (true) {
      long p = parse_int(c);
      if (p <= 0) c.fail("partition parts must be positive");
      parts.push_back(static_cast<int>(p));
      if (c.try_char(']')) break;
      c.expect(',');
    }
  }
  if (!is_partition(parts)) c.fail("partition parts must be weakly decreasing");
  return parts;
}

// Parses one generator.  Returns true and appends to `w` unless the
// generator is a unit (degree-0 xi/chi/theta, empty b), which is skipped.
void parse_gen(Cursor& c, int rank, Word& w) {
  enum class Kind { E, H, Xi, Chi, Theta, B } kind;
  if (c.match_keyword("E")) {
    kind = Kind::E;
  } else if (c.match_keyword("H")) {
    kind = Kind::H;
  } else if (c.match_keyword("xi")) {
    kind = Kind::Xi;
  } else if (c.match_keyword("chi")) {
    kind = Kind::Chi;
  } else if (c.match_keyword("theta")) {
    kind = Kind::Theta;
  } else if (c.match_keyword("b")) {
    kind = Kind::B;
  } else {
    c.fail("expected a generator");
  }
  c.expect('(');
  long node = parse_int(c);
  if (node < 1 || node > rank)
    c.fail("node " + std::to_string(node) + " out of range for rank " + std::to_string(rank));
  c.expect(',');
  if (kind == Kind::B) {
    Partition parts = parse_partition(c);
    c.expect(')');
    if (!parts.empty()) w.push_back(Letter::schur_b(static_cast<int>(node), parts));
    return;
  }
  long deg = parse_int(c);
  c.expect(')');
  int n = static_cast<int>(node);
  int d = static_cast<int>(deg);
  switch (kind) {
    case Kind::E:
      w.push_back(Letter::e(n, d));
      break;
    case Kind::H:
      if (d < 1) c.fail("H degree must be >= 1");
      w.push_back(Letter::h(n, d));
      break;
    case Kind::Xi:
      if (d < 0) c.fail("xi degree must be >= 0");
      if (d > 0) w.push_back(Letter::xi(n, d));
      break;
    case Kind::Chi:
      if (d < 0) c.fail("chi degree must be >= 0");
      if (d > 0) w.push_back(Letter::chi(n, d));
      break;
    case Kind::Theta:
      if (d < 0) c.fail("theta degree must be >= 0");
      if (d > 0) w.push_back(Letter::theta(n, d));
      break;
    case Kind::B:
      break;
  }
}

Word parse_word(Cursor& c, int rank) {
  Word w;
  do {
    parse_gen(c, rank, w);
  } while (gen_starts(c));
  return w;
}

}  // namespace

Element parse_element(const std::string& text, int rank) {
  Cursor c(text);
  if (c.eof()) throw ParseError("empty element text");
  Element out;
  bool neg = c.try_char('-');
  while (true) {
    Scalar coeff(1);
    Word w;
    if (gen_starts(c)) {
      w = parse_word(c, rank);
    } else {
      coeff = parse_term_scalar(c);
      if (c.try_char('*')) {
        if (!gen_starts(c)) c.fail("expected a generator after '*'");
        w = parse_word(c, rank);
      }
    }
    if (neg) coeff = -coeff;
    out.add_term(std::move(w), coeff);
    if (c.eof()) break;
    if (c.try_char('+')) {
      neg = false;
    } else if (c.try_char('-')) {
      neg = true;
    } else {
      c.fail("expected '+' or '-'");
    }
  }
  return out;
}

Scalar parse_scalar(const std::string& text) {
  Cursor c(text);
  if (c.eof()) throw ParseError("empty scalar text");
  Scalar s = parse_expr(c);
  if (!c.eof()) c.fail("unexpected trailing input");
  return s;
}

std::string serialize(const Element& x) { return x.str(); }

CartanData load_cartan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return CartanData::parse(buf.str());
}

}  // namespace qloop
