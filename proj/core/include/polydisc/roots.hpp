#pragma once

#include <complex>
#include <vector>

#include "polydisc/bigfloat.hpp"
#include "polydisc/int_poly.hpp"

namespace polydisc {

/// Certified isolating discs for all complex roots of a square-free f.
///
/// Roots are ordered: real roots ascending, then conjugate pairs ordered by
/// real part with the positive-imaginary member first. pairing[i] is the
/// index of the conjugate of root i (i itself for real roots). Real roots
/// have an exactly zero imaginary midpoint.
struct RootSystem {
  IntPoly poly;
  std::vector<ComplexBall> roots;
  std::vector<int> pairing;
  int real_count = 0;
  mpfr_prec_t precision = 0;  // working precision of the midpoints

  int degree() const { return static_cast<int>(roots.size()); }
  bool is_real(int i) const { return pairing[i] == i; }
};

/// Radii are at most 2^-precision_bits. Throws DomainError for D(f) = 0 or
/// deg f < 1, PrecisionExhausted if certification fails below the internal
/// precision cap.
RootSystem isolate_roots(const IntPoly& f, long precision_bits);

/// Uncertified double-precision roots from the deterministic Aberth start.
std::vector<std::complex<double>> approximate_roots(const IntPoly& f);

/// Value of f at a complex ball by Horner's rule.
ComplexBall eval_ball(const IntPoly& f, const ComplexBall& z);

}  // namespace polydisc
