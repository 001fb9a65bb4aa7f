#include "polydisc/equivalence.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "polydisc/errors.hpp"

namespace polydisc {

bool Unimodular2::valid() const {
  Integer dt = det();
  return (dt == 1 || dt == -1) && (sign == 1 || sign == -1);
}

Unimodular2 compose(const Unimodular2& u, const Unimodular2& v) {
  return {u.a * v.a + u.b * v.c, u.a * v.b + u.b * v.d, u.c * v.a + u.d * v.c, u.c * v.b + u.d * v.d,
          u.sign * v.sign};
}

Unimodular2 inverse(const Unimodular2& u) {
  // The action is F(X, Y) -> sign * F(aX + bY, cX + dY), so composing with the
  // matrix inverse and the same sign gives back F.
  Integer dt = u.det();
  Unimodular2 r{u.d * dt, -u.b * dt, -u.c * dt, u.a * dt, u.sign};
  return r;
}

std::string to_string(const Unimodular2& u) {
  std::ostringstream os;
  os << "[[" << u.a << ',' << u.b << "],[" << u.c << ',' << u.d << "]]," << u.sign;
  return os.str();
}

namespace {

class Scanner {
 public:
  Scanner(std::string_view s, const char* what) : s_(s), what_(what) {}

  void expect(char ch) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ch) fail();
    ++pos_;
  }
  Integer integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) fail();
    std::string tok(s_.substr(start, pos_ - start));
    if (tok[0] == '+') tok.erase(0, 1);
    return Integer(tok);
  }
  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  void finish() {
    skip();
    if (pos_ != s_.size()) fail();
  }
  [[noreturn]] void fail() const { throw ParseError(std::string("cannot parse ") + what_ + " '" + std::string(s_) + "'"); }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string_view s_;
  const char* what_;
  std::size_t pos_ = 0;
};

}  // namespace

Unimodular2 parse_unimodular2(std::string_view text) {
  Scanner sc(text, "unimodular matrix");
  Unimodular2 u;
  sc.expect('[');
  sc.expect('[');
  u.a = sc.integer();
  sc.expect(',');
  u.b = sc.integer();
  sc.expect(']');
  sc.expect(',');
  sc.expect('[');
  u.c = sc.integer();
  sc.expect(',');
  u.d = sc.integer();
  sc.expect(']');
  sc.expect(']');
  sc.expect(',');
  Integer s = sc.integer();
  sc.finish();
  if (s != 1 && s != -1) sc.fail();
  u.sign = static_cast<int>(s.get_si());
  if (!u.valid()) throw DomainError("matrix " + to_string(u) + " is not unimodular");
  return u;
}

std::string to_string(const ZShift& s) {
  std::ostringstream os;
  os << s.a << ',' << (s.reflect ? "true" : "false");
  return os.str();
}

ZShift parse_zshift(std::string_view text) {
  Scanner sc(text, "Z-shift");
  ZShift s;
  s.a = sc.integer();
  sc.expect(',');
  std::string w = sc.word();
  sc.finish();
  if (w == "true")
    s.reflect = true;
  else if (w != "false")
    sc.fail();
  return s;
}

IntPoly apply_zshift(const IntPoly& f, const ZShift& s) {
  if (!s.reflect) return taylor_shift(f, s.a);
  IntPoly r = taylor_shift(negate_variable(f), -s.a);  // f(-(X - a))
  return f.degree() % 2 ? -r : r;
}

IntPoly apply_gl2(const IntPoly& f, const Unimodular2& u, int formal_degree) {
  const int n = formal_degree < 0 ? f.degree() : formal_degree;
  if (f.degree() < 0) return f;
  if (n < f.degree()) throw DomainError("apply_gl2: formal degree below the degree");
  IntPoly p(std::vector<Integer>{u.b, u.a});
  IntPoly q(std::vector<Integer>{u.d, u.c});
  std::vector<IntPoly> ppow(n + 1), qpow(n + 1);
  ppow[0] = qpow[0] = IntPoly{1};
  for (int k = 1; k <= n; ++k) {
    ppow[k] = ppow[k - 1] * p;
    qpow[k] = qpow[k - 1] * q;
  }
  IntPoly r;
  for (int k = 0; k <= n; ++k)
    if (f[k] != 0) r += f[k] * (ppow[k] * qpow[n - k]);
  return u.sign < 0 ? -r : r;
}

Unimodular2 zshift_matrix(const ZShift& s, int degree) {
  if (!s.reflect) return Unimodular2::translation(s.a);
  return {-1, s.a, 0, 1, degree % 2 ? -1 : 1};
}

std::optional<ZShift> z_equivalent(const IntPoly& f, const IntPoly& g) {
  const int n = f.degree();
  if (n <= 1 || g.degree() <= 1) throw DomainError("z_equivalent: degree must be at least 2");
  if (g.degree() != n || g.leading() != f.leading()) return std::nullopt;
  if (discriminant(f) != discriminant(g)) return std::nullopt;
  Integer na0 = f.leading() * n;
  for (bool reflect : {false, true}) {
    IntPoly base = reflect ? (n % 2 ? -negate_variable(f) : negate_variable(f)) : f;
    // base(X + a) for plain, base(X - a) for reflect; X^{n-1} coefficient
    // moves by +n*a0*a resp. -n*a0*a.
    Integer diff = g[n - 1] - base[n - 1];
    if (reflect) diff = -diff;
    if (!mpz_divisible_p(diff.get_mpz_t(), na0.get_mpz_t())) continue;
    Integer a = diff / na0;
    ZShift s{a, reflect};
    if (apply_zshift(f, s) == g) return s;
  }
  return std::nullopt;
}

namespace {

// 0, 1, -1, 2, -2, ..., B, -B
std::vector<Integer> entry_order(const Integer& bound) {
  std::vector<Integer> v{0};
  for (Integer k = 1; k <= bound; ++k) {
    v.push_back(k);
    v.push_back(-k);
  }
  return v;
}

}  // namespace

Gl2SearchResult gl2_equivalent_bounded(const IntPoly& f, const IntPoly& g, const Integer& entry_bound) {
  const int n = f.degree();
  if (n <= 1 || g.degree() <= 1) throw DomainError("gl2_equivalent_bounded: degree must be at least 2");
  if (entry_bound < 1) throw DomainError("gl2_equivalent_bounded: entry bound must be positive");
  Gl2SearchResult res;
  if (g.degree() != n || discriminant(f) != discriminant(g)) return res;
  std::vector<Integer> vals = entry_order(entry_bound);
  const Integer& lg = g.leading();
  const Integer& g0 = g[0];
  for (const auto& a : vals)
    for (const auto& b : vals)
      for (const auto& c : vals) {
        Integer lead = f.eval_homogeneous(a, c, n);
        if (abs(lead) != abs(lg)) continue;
        for (const auto& d : vals) {
          Integer dt = a * d - b * c;
          if (dt != 1 && dt != -1) continue;
          Integer tail = f.eval_homogeneous(b, d, n);
          for (int sign : {1, -1}) {
            if (sign * lead != lg || sign * tail != g0) continue;
            Unimodular2 u{a, b, c, d, sign};
            if (apply_gl2(f, u) == g) {
              res.witness = u;
              return res;
            }
          }
        }
      }
  return res;
}

bool verify_gl2_witness(const IntPoly& f, const IntPoly& g, const Unimodular2& u) {
  return u.valid() && apply_gl2(f, u) == g;
}

}  // namespace polydisc
