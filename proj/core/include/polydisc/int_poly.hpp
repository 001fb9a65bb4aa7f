#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polydisc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order: coeffs()[k] multiplies X^k.
/// The representation is kept normalized (no trailing zero coefficients), so
/// degree() is always the index of the last stored entry and the zero
/// polynomial has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int k);
  static IntPoly from_descending(const std::vector<Integer>& descending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  /// Coefficient of X^k; zero outside [0, degree].
  const Integer& operator[](int k) const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficients a_0, ..., a_n with a_0 the leading coefficient.
  std::vector<Integer> descending() const;
  const Integer& leading() const;

  IntPoly derivative() const;
  Integer eval(const Integer& x) const;
  /// Value of the homogenization of formal degree `deg` at (x, y).
  Integer eval_homogeneous(const Integer& x, const Integer& y, int deg) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human text, descending powers: "x^3 - x^2 - 2*x + 1".
  std::string to_string() const;
  /// Bracketed ascending coefficient list: "[1,-2,-1,1]".
  std::string to_list_string() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Parses either the human form or the bracketed ascending list form.
IntPoly parse_poly(std::string_view text);

/// Polynomial with rational coefficients, held as numerator / denominator.
class RatPoly {
 public:
  RatPoly() : den_(1) {}
  RatPoly(IntPoly num, Integer den);
  explicit RatPoly(const IntPoly& p) : num_(p), den_(1) {}

  const IntPoly& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  int degree() const { return num_.degree(); }
  Rational operator[](int k) const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

 private:
  IntPoly num_;
  Integer den_;
};

Integer height(const IntPoly& f);
Integer content(const IntPoly& f);
/// (c, g) with f = sign * c * g, g primitive with positive leading coefficient.
std::pair<Integer, IntPoly> content_and_primitive(const IntPoly& f);
IntPoly primitive_part(const IntPoly& f);

/// Exact division; throws InternalError when g does not divide f over Z.
IntPoly divide_exact(const IntPoly& f, const IntPoly& g);
/// True with the quotient stored when g divides f over Z.
bool divides(const IntPoly& g, const IntPoly& f, IntPoly* quotient = nullptr);
/// Primitive gcd with positive leading coefficient (content ignored).
IntPoly gcd_primitive(const IntPoly& f, const IntPoly& g);
/// Pseudo-remainder prem(f, g) = lc(g)^(deg f - deg g + 1) f mod g.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

/// f(X + a).
IntPoly taylor_shift(const IntPoly& f, const Integer& a);
/// f(-X).
IntPoly negate_variable(const IntPoly& f);
/// X^deg f(1/X) using the formal degree deg(f).
IntPoly reverse(const IntPoly& f);

/// Sylvester resultant Res(f, g).
Integer resultant(const IntPoly& f, const IntPoly& g);
/// D(f) = (-1)^{n(n-1)/2} Res(f, f') / a_0; requires deg f >= 1.
Integer discriminant(const IntPoly& f);
/// Discriminant of the binary form of degree formal_degree >= deg f whose
/// dehomogenization is f; differs from D(f) when the degree dropped.
Integer discriminant(const IntPoly& f, int formal_degree);

Integer binomial(unsigned n, unsigned k);

}  // namespace polydisc
