#pragma once

#include <map>
#include <string>
#include <vector>

#include "polydisc/int_poly.hpp"
#include "polydisc/linalg.hpp"

namespace polydisc {

/// Sparse polynomial in nvars variables with rational coefficients. Terms are
/// keyed by exponent vector; zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);
  /// The variable with index i (0-based).
  static MultiPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  int total_degree() const;
  bool is_homogeneous() const;
  bool is_integral() const;
  /// Largest exponent vector in lexicographic order (the "first" monomial).
  const Exponents& leading_exponents() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  Rational eval(const std::vector<Rational>& x) const;
  Integer eval(const std::vector<Integer>& x) const;  // requires integral coefficients

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Terms in decreasing lexicographic order, variables named
  /// prefix + (index + first_index): "x1^3 + 2*x2^3 - 6*x1*x2*x3".
  std::string to_string(const std::string& prefix = "x", int first_index = 1) const;

 private:
  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned k);
/// F(U X): variable i is replaced by sum_j U(i, j) X_j.
MultiPoly substitute_linear(const MultiPoly& F, const IntMatrix& U);
/// Exact square root with positive leading coefficient; false when none exists.
bool sqrt_exact(const MultiPoly& p, MultiPoly* root);

}  // namespace polydisc
