#include "polydisc/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "polydisc/errors.hpp"
#include "polydisc/linalg.hpp"

namespace polydisc {

namespace {

const Integer& zero_integer() {
  static const Integer z = 0;
  return z;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int k) {
  std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_descending(const std::vector<Integer>& descending) {
  return IntPoly(std::vector<Integer>(descending.rbegin(), descending.rend()));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::operator[](int k) const {
  if (k < 0 || k > degree()) return zero_integer();
  return coeffs_[k];
}

std::vector<Integer> IntPoly::descending() const {
  return std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend());
}

const Integer& IntPoly::leading() const {
  if (is_zero()) return zero_integer();
  return coeffs_.back();
}

IntPoly IntPoly::derivative() const {
  if (degree() <= 0) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(d));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPoly::eval_homogeneous(const Integer& x, const Integer& y, int deg) const {
  // sum_k c_k x^k y^(deg-k)
  Integer acc = 0;
  Integer ypow = 1;
  std::vector<Integer> ypows(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k) {
    ypows[k] = ypow;
    ypow *= y;
  }
  Integer xpow = 1;
  for (int k = 0; k <= deg; ++k) {
    if (k <= degree() && coeffs_[k] != 0) acc += coeffs_[k] * xpow * ypows[deg - k];
    xpow *= x;
  }
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> p(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) p[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(p);
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 'x';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::string IntPoly::to_list_string() const {
  std::ostringstream os;
  os << '[';
  if (is_zero()) os << '0';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ',';
    os << coeffs_[k];
  }
  os << ']';
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  IntPoly parse() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '[') return parse_list();
    return parse_human();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial '" + std::string(s_) + "': " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

  Integer parse_unsigned() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits at offset " + std::to_string(start));
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Integer parse_signed() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    Integer v = parse_unsigned();
    return neg ? Integer(-v) : v;
  }

  IntPoly parse_list() {
    ++pos_;  // '['
    std::vector<Integer> coeffs;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
    } else {
      for (;;) {
        coeffs.push_back(parse_signed());
        skip_ws();
        if (pos_ >= s_.size()) fail("unterminated list");
        if (s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (s_[pos_] == ']') {
          ++pos_;
          break;
        }
        fail("unexpected character in list");
      }
    }
    if (!at_end()) fail("trailing characters after list");
    return IntPoly(std::move(coeffs));
  }

  bool at_variable() {
    skip_ws();
    return pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'X');
  }

  IntPoly parse_human() {
    std::vector<Integer> coeffs;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      skip_ws();
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' at offset " + std::to_string(pos_));
      }
      first = false;
      skip_ws();
      Integer coef = 1;
      bool have_coef = false;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coef = parse_unsigned();
        have_coef = true;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          if (!at_variable()) fail("expected variable after '*'");
        }
      }
      unsigned long power = 0;
      if (at_variable()) {
        ++pos_;
        power = 1;
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '^' || (s_[pos_] == '*' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '*'))) {
          pos_ += s_[pos_] == '^' ? 1 : 2;
          Integer e = parse_unsigned();
          if (e > 100000) fail("exponent too large");
          power = e.get_ui();
        }
      } else if (!have_coef) {
        fail("expected a term at offset " + std::to_string(pos_));
      }
      if (coeffs.size() <= power) coeffs.resize(power + 1);
      coeffs[power] += sign * coef;
    }
    if (first) fail("empty input");
    return IntPoly(std::move(coeffs));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

RatPoly::RatPoly(IntPoly num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("RatPoly: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  Integer g = content(num_);
  g = gcd(g, den_);
  if (num_.is_zero()) g = den_;
  if (g > 1) {
    std::vector<Integer> c = num_.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    num_ = IntPoly(std::move(c));
    den_ /= g;
  }
}

Rational RatPoly::operator[](int k) const {
  Rational r(num_[k], den_);
  r.canonicalize();
  return r;
}

Integer height(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("height: zero polynomial");
  Integer h = 0;
  for (const auto& c : f.coeffs())
    if (abs(c) > h) h = abs(c);
  return h;
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

std::pair<Integer, IntPoly> content_and_primitive(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("content_and_primitive: zero polynomial");
  Integer c = content(f);
  std::vector<Integer> v = f.coeffs();
  bool flip = f.leading() < 0;
  for (auto& x : v) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    if (flip) x = -x;
  }
  return {c, IntPoly(std::move(v))};
}

IntPoly primitive_part(const IntPoly& f) { return content_and_primitive(f).second; }

bool divides(const IntPoly& g, const IntPoly& f, IntPoly* quotient) {
  if (g.is_zero()) throw DomainError("divides: division by zero polynomial");
  if (f.is_zero()) {
    if (quotient) *quotient = IntPoly();
    return true;
  }
  int n = f.degree(), m = g.degree();
  if (n < m) return false;
  std::vector<Integer> rem = f.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(n - m) + 1);
  const Integer& lc = g.leading();
  for (int k = n - m; k >= 0; --k) {
    Integer& top = rem[k + m];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    q[k] = c;
    for (int j = 0; j <= m; ++j) rem[k + j] -= c * g[j];
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

IntPoly divide_exact(const IntPoly& f, const IntPoly& g) {
  IntPoly q;
  if (!divides(g, f, &q)) throw InternalError("divide_exact: " + g.to_string() + " does not divide " + f.to_string());
  return q;
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DomainError("pseudo_remainder: zero divisor");
  int m = g.degree();
  std::vector<Integer> r = f.coeffs();
  int n = f.degree();
  if (n < m) return f;
  const Integer& lc = g.leading();
  int steps = n - m + 1;
  for (int k = n; k >= m; --k) {
    Integer top = r[k];
    for (auto& x : r) x *= lc;
    for (int j = 0; j <= m; ++j) r[k - m + j] -= top * g[j];
    --steps;
  }
  // remaining multiplications keep the lc^(n-m+1) normalization
  IntPoly out(std::move(r));
  for (; steps > 0; --steps) out *= lc;
  return out;
}

IntPoly gcd_primitive(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) return {};
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  IntPoly a = primitive_part(f), b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? IntPoly() : primitive_part(r);
  }
  return primitive_part(a);
}

IntPoly taylor_shift(const IntPoly& f, const Integer& a) {
  std::vector<Integer> c = f.coeffs();
  int n = f.degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) c[j] += a * c[j + 1];
  return IntPoly(std::move(c));
}

IntPoly negate_variable(const IntPoly& f) {
  std::vector<Integer> c = f.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return IntPoly(std::move(c));
}

IntPoly reverse(const IntPoly& f) {
  std::vector<Integer> c = f.coeffs();
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  int n = f.degree(), m = g.degree();
  if (n < 0 || m < 0) return 0;
  if (n == 0 && m == 0) return 1;
  if (n == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), m);
    return r;
  }
  if (m == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), n);
    return r;
  }
  std::size_t size = static_cast<std::size_t>(n + m);
  IntMatrix s(size, size);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(i, i + k) = f[n - k];
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(m + i, i + k) = g[m - k];
  return determinant(std::move(s));
}

Integer discriminant(const IntPoly& f) {
  int n = f.degree();
  if (n < 1) throw DomainError("discriminant: degree must be at least 1");
  if (n == 1) return 1;
  Integer r = resultant(f, f.derivative());
  Integer d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

Integer discriminant(const IntPoly& f, int formal_degree) {
  const int n = f.degree();
  if (formal_degree < n || formal_degree < 1) throw DomainError("discriminant: formal degree below the degree");
  if (n == formal_degree) return discriminant(f);
  // A root at infinity: D_n = a_(n-1)^2 D_(n-1) for one, zero for a multiple one.
  if (n < formal_degree - 1 || n < 0) return 0;
  if (n == 0) return 1;
  return f.leading() * f.leading() * discriminant(f);
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace polydisc
