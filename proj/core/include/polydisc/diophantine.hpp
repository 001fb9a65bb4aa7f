#pragma once

#include <vector>

#include "polydisc/multipoly.hpp"
#include "polydisc/numberfield.hpp"

namespace polydisc {

/// D(x) for an element: the discriminant of its characteristic polynomial.
Rational element_discriminant(const NumberField& K, const NFElement& x);

/// D(x_2 w_2 + ... + x_n w_n) over the presentation basis 1, w_2, ..., w_n of
/// O, as a form of degree n(n-1) in n - 1 variables. Built by interpolation
/// on an integer grid; the result is checked to be integral.
MultiPoly discriminant_form(const NumberField& K, const OrderModule& O);

struct IndexForm {
  OrderModule order;
  MultiPoly discriminant_form;
  /// Degree n(n-1)/2 with I^2 * D_O = discriminant_form; the
  /// lexicographically first monomial has a positive coefficient.
  MultiPoly form;
};

IndexForm index_form(const NumberField& K, const OrderModule& O);

struct BoxSolutions {
  std::vector<std::vector<Integer>> solutions;  // sorted
  long box = 0;
  /// Completeness holds only inside [-box, box]^m.
  bool box_limited = true;
  bool touches_boundary = false;  // some solution has a coordinate at +-box
};

/// All x in [-box, box]^m with F(x) in targets (F integral). Candidates are
/// screened modulo 2^64 and confirmed exactly.
BoxSolutions solve_form_bounded(const MultiPoly& F, const std::vector<Integer>& targets, long box);

/// F(x, y) = sum_k F[k] x^k y^(deg - k) = m with |x|, |y| <= box.
BoxSolutions thue_solve_bounded(const IntPoly& F, const Integer& m, long box);

/// |I(x)| = value. Orders of degree 3 and 4 only (UnsupportedDegree otherwise).
BoxSolutions solve_index_form_bounded(const IndexForm& idx, const Integer& value, long box);

/// D(x) = D, i.e. |I(x)| = sqrt(D / D_O) when that is an integer.
BoxSolutions solve_discriminant_form_bounded(const IndexForm& idx, const Integer& D, long box);

struct GeneratorClass {
  std::vector<Integer> coords;  // x_2, ..., x_n; first non-zero entry positive
  NFElement element;
  IntPoly min_poly;
};

struct GeneratorSearch {
  std::vector<GeneratorClass> classes;
  long box = 0;
  bool box_limited = true;
  bool touches_boundary = false;
};

/// One class per +- pair of index-one solutions; Z[x] = O is checked for each.
GeneratorSearch generators_of_order(const NumberField& K, const IndexForm& idx, long box);

struct MonicEnumeration {
  std::vector<IntPoly> classes;  // one representative per Z-equivalence class
  int degree = 0;
  Integer disc;
  long cap = 0;
  int max_degree = 0;
  bool box_limited = true;
};

/// Monic degree-n polynomials with X^(n-1) coefficient in {0, ..., n-1},
/// the others in [-cap, cap] and discriminant D, up to shifts and X -> -X.
/// Throws DomainError when n exceeds max_degree_for_discriminant(|D|, true).
MonicEnumeration enumerate_monic_by_discriminant(int n, const Integer& D, long cap);

}  // namespace polydisc
