#pragma once

#include <string>

#include "polydisc/bigfloat.hpp"
#include "polydisc/bounds.hpp"
#include "polydisc/equivalence.hpp"
#include "polydisc/int_poly.hpp"

namespace polydisc {

/// A X^2 + B XY + C Y^2. A unimodular U acts by q -> q(aX + bY, cX + dY),
/// which matches apply_gl2 on the polynomial q(X, 1).
struct IntBQF {
  Integer A, B, C;

  Integer disc() const { return B * B - 4 * A * C; }
  IntPoly to_poly() const { return IntPoly(std::vector<Integer>{C, B, A}); }
  static IntBQF from_poly(const IntPoly& f);  // requires deg f <= 2

  friend bool operator==(const IntBQF& x, const IntBQF& y) { return x.A == y.A && x.B == y.B && x.C == y.C; }
};

/// "(A,B,C)".
std::string to_string(const IntBQF& q);
IntBQF parse_bqf(std::string_view text);
IntBQF transform(const IntBQF& q, const Unimodular2& u);

struct ReducedBQF {
  IntBQF form;
  Unimodular2 witness;  // transform(input, witness) == form
};

/// Gauss reduction of a positive definite form: |B| <= A <= C with
/// B in (-A, A], and B >= 0 when A = C.
ReducedBQF gauss_reduce(const IntBQF& q);
bool is_gauss_reduced(const IntBQF& q);

struct RealBQF {
  RealBall A, B, C;
};

RealBQF transform(const RealBQF& q, const Unimodular2& u);

struct ReducedRealBQF {
  RealBQF form;
  Unimodular2 witness;
};

/// Gauss reduction with certified comparisons. A step is taken only when the
/// violated inequality is certain; an undecided comparison is accepted when
/// the ball radii are below 2^-16 of A (the form is then reduced up to that
/// relative slack) and raises PrecisionExhausted otherwise.
ReducedRealBQF gauss_reduce_real(const RealBQF& q);

struct QuadraticReduction {
  IntPoly g;
  Unimodular2 witness;  // apply_gl2(f, witness) == g
  BoundReport report;
  bool bound_holds = false;  // exact check of the case bound
};

/// Reduction of a quadratic polynomial with the case split
/// D < 0: H <= |D|/3; D > 0 irreducible: H <= D/4; D > 0 reducible: H <= D^(1/2).
QuadraticReduction reduce_quadratic(const IntPoly& f);

struct MonicQuadraticReduction {
  IntPoly g;
  ZShift shift;
  BoundReport report;
  bool bound_holds = false;  // H(g) <= |D|/4 + 1, checked exactly
};

MonicQuadraticReduction reduce_monic_quadratic(const IntPoly& f);

}  // namespace polydisc
