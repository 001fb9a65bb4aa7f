#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "polydisc/int_poly.hpp"

namespace polydisc {

/// 2x2 integer matrix of determinant +-1 with a global sign for the action
/// f -> sign * (cX + d)^n f((aX + b)/(cX + d)).
struct Unimodular2 {
  Integer a = 1, b = 0, c = 0, d = 1;
  int sign = 1;

  static Unimodular2 identity() { return {}; }
  static Unimodular2 translation(const Integer& t) { return {1, t, 0, 1, 1}; }
  static Unimodular2 swap() { return {0, -1, 1, 0, 1}; }

  Integer det() const { return a * d - b * c; }
  bool valid() const;  // det = +-1 and sign = +-1

  friend bool operator==(const Unimodular2& x, const Unimodular2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d && x.sign == y.sign;
  }
};

/// Matrix product u * v with multiplied signs. With this order,
/// apply_gl2(apply_gl2(f, u), v) == apply_gl2(f, compose(u, v)).
Unimodular2 compose(const Unimodular2& u, const Unimodular2& v);
/// Inverse action: apply_gl2(apply_gl2(f, u), inverse(u)) == f.
Unimodular2 inverse(const Unimodular2& u);

/// "[[a,b],[c,d]],sign" with sign written as 1 or -1.
std::string to_string(const Unimodular2& u);
Unimodular2 parse_unimodular2(std::string_view text);

struct ZShift {
  Integer a = 0;
  bool reflect = false;

  friend bool operator==(const ZShift& x, const ZShift& y) { return x.a == y.a && x.reflect == y.reflect; }
};

/// "a,reflect" with reflect written true/false.
std::string to_string(const ZShift& s);
ZShift parse_zshift(std::string_view text);

/// f(X + a), or (-1)^n f(-X + a) when reflect is set.
IntPoly apply_zshift(const IntPoly& f, const ZShift& s);
/// sign * (cX + d)^n f((aX + b)/(cX + d)) with n = deg f unless a larger
/// formal degree is given. The result has lower degree exactly when f (as a
/// form of degree n) vanishes at (a, c); pass n again to keep acting on it.
IntPoly apply_gl2(const IntPoly& f, const Unimodular2& u, int formal_degree = -1);
/// The matrix (+-1, a; 0, 1) realizing a Z-shift through apply_gl2.
Unimodular2 zshift_matrix(const ZShift& s, int degree);

/// Exact decision of Z-equivalence; DomainError when deg <= 1.
std::optional<ZShift> z_equivalent(const IntPoly& f, const IntPoly& g);

struct Gl2SearchResult {
  std::optional<Unimodular2> witness;  // empty means not within bound
};

/// Exhaustive search over |entries| <= entry_bound. Each entry runs through
/// 0, 1, -1, 2, -2, ... in row-major order (a, b, c, d), sign + before -.
Gl2SearchResult gl2_equivalent_bounded(const IntPoly& f, const IntPoly& g, const Integer& entry_bound);

bool verify_gl2_witness(const IntPoly& f, const IntPoly& g, const Unimodular2& u);

}  // namespace polydisc
