#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polydisc/bigfloat.hpp"
#include "polydisc/int_poly.hpp"

namespace polydisc {

/// Value of an explicit height bound together with the inputs it was
/// evaluated at. Bounds that overflow any float format are carried as log10.
struct BoundReport {
  std::string name;    // e.g. "monic-z"
  std::string branch;  // which case of the statement applied
  int degree = 0;
  Integer abs_disc;
  BigFloat log10_bound{256};
  bool log_clamped = false;  // ln|D| replaced by max(ln|D|, 1)
  std::vector<std::pair<std::string, std::string>> details;

  /// 10^log10_bound, meaningful when the bound fits a double.
  double value() const;
};

constexpr mpfr_prec_t kBoundPrecision = 256;

/// Binary forms of degree 2, D < 0: H(g) <= |D|/3.
BoundReport bound_quadratic_height(const Integer& D, bool reducible);
/// Monic quadratics: H(g) <= |D|/4 + 1.
BoundReport bound_monic_quadratic_height(const Integer& D);
/// Cubics: (64/27)|D|^(1/2), or (64/(3 sqrt 3))|D| with a rational root.
BoundReport bound_cubic_height(const Integer& D, bool reducible);
/// log10 of exp{n^20 8^(n^2+19) (|D| L^n)^(n-1)} with L = max(ln|D|, 1).
BoundReport bound_monic_equivalence_height(int n, const Integer& abs_disc);
/// log10 of exp{(16 n^3)^(25 n^2) |D|^(5n-3)}.
BoundReport bound_gl2_equivalence_height(int n, const Integer& abs_disc);

/// floor(3 + 2 log|D| / log 3), or floor(2 + ...) for monic polynomials,
/// decided exactly: the largest k with 3^k <= D^2.
int max_degree_for_discriminant(const Integer& abs_disc, bool monic);

}  // namespace polydisc
