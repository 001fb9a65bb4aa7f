#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydisc/int_poly.hpp"
#include "polydisc/linalg.hpp"

namespace polydisc {

/// K = Q[X]/(f) for a primitive irreducible f with positive leading
/// coefficient. A negative leading coefficient is normalized away by negation.
class NumberField {
 public:
  explicit NumberField(const IntPoly& f);

  const IntPoly& poly() const { return f_; }
  int degree() const { return n_; }
  /// Power-basis coordinates of alpha^k for k < 2n - 1.
  const std::vector<Rational>& power(int k) const { return powers_[k]; }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.f_ == b.f_; }

 private:
  IntPoly f_;
  int n_ = 0;
  std::vector<std::vector<Rational>> powers_;
};

/// sum coords[i] alpha^i.
struct NFElement {
  std::vector<Rational> coords;

  bool is_zero() const;
  friend bool operator==(const NFElement& a, const NFElement& b) { return a.coords == b.coords; }
  friend bool operator<(const NFElement& a, const NFElement& b) { return a.coords < b.coords; }
};

NFElement nf_from_rational(const NumberField& K, const Rational& x);
NFElement nf_generator(const NumberField& K);
/// Reduces an arbitrary polynomial in alpha (ascending rational coefficients).
NFElement nf_from_poly(const NumberField& K, const std::vector<Rational>& ascending);
NFElement nf_add(const NFElement& x, const NFElement& y);
NFElement nf_sub(const NFElement& x, const NFElement& y);
NFElement nf_neg(const NFElement& x);
NFElement nf_scale(const NFElement& x, const Rational& c);
NFElement nf_mul(const NumberField& K, const NFElement& x, const NFElement& y);
NFElement nf_pow(const NumberField& K, const NFElement& x, unsigned k);
/// Throws DomainError for x = 0.
NFElement nf_inv(const NumberField& K, const NFElement& x);
/// Row i holds the coordinates of x * alpha^i, so (v * M) = coords of x * y
/// for y with coordinate row v.
RatMatrix mult_matrix(const NumberField& K, const NFElement& x);
Rational nf_norm(const NumberField& K, const NFElement& x);
Rational nf_trace(const NumberField& K, const NFElement& x);
/// Monic characteristic polynomial of multiplication by x (ascending).
std::vector<Rational> nf_charpoly(const NumberField& K, const NFElement& x);
/// Evaluates an integer polynomial at x.
NFElement nf_eval(const NumberField& K, const IntPoly& g, const NFElement& x);
/// Polynomial in "a", e.g. "a^2 - 1/2*a + 3".
std::string to_string(const NFElement& x);

/// Full-rank Z-module (1/denom) * rows(basis). The basis is the Hermite form
/// taken with the coordinate order reversed: row i only involves
/// 1, alpha, ..., alpha^i, and the diagonal is positive. The denominator is
/// minimal, so equal modules have identical representations.
struct ZModuleInK {
  IntMatrix basis;
  Integer denom{1};

  int rank() const { return static_cast<int>(basis.rows()); }
  NFElement element(int i) const;
  std::vector<NFElement> elements() const;

  friend bool operator==(const ZModuleInK& a, const ZModuleInK& b) {
    return a.denom == b.denom && a.basis == b.basis;
  }
};

/// Throws DomainError when the generators do not span rank n.
ZModuleInK module_from_generators(const NumberField& K, const std::vector<NFElement>& gens);
bool module_contains(const ZModuleInK& M, const NFElement& x);
bool module_contains(const ZModuleInK& M, const ZModuleInK& N);  // N subset of M
ZModuleInK module_sum(const NumberField& K, const ZModuleInK& M, const ZModuleInK& N);
ZModuleInK module_product(const NumberField& K, const ZModuleInK& M, const ZModuleInK& N);
ZModuleInK module_scale(const NumberField& K, const ZModuleInK& M, const NFElement& x);
ZModuleInK module_intersection(const NumberField& K, const ZModuleInK& M, const ZModuleInK& N);
/// {x : x N subset of M}.
ZModuleInK module_colon(const NumberField& K, const ZModuleInK& M, const ZModuleInK& N);
/// Covolume |det(basis)| / denom^n relative to the power basis.
Rational module_volume(const ZModuleInK& M);
std::string to_string(const ZModuleInK& M);

/// The module generated by 1, x, ..., x^(n-1).
ZModuleInK power_module(const NumberField& K, const NFElement& x);

struct OrderModule {
  ZModuleInK module;
  /// Presentation basis starting with 1 (for invariant_order: 1, w_2, ..., w_n).
  std::vector<NFElement> basis;
  Integer discriminant;
};

/// Determinant of the trace form Tr(b_i b_j).
Rational trace_form_discriminant(const NumberField& K, const std::vector<NFElement>& basis);
/// Builds an order from a module, checking 1 in M and closure under products.
OrderModule make_order(const NumberField& K, const ZModuleInK& M);
/// Multiplier ring {x : x M subset of M}.
ZModuleInK multiplier_ring(const NumberField& K, const ZModuleInK& M);

/// Basis 1, w_2, ..., w_n with w_j = a_0 alpha^(j-1) + ... + a_(j-2) alpha,
/// where f = a_0 X^n + a_1 X^(n-1) + ... . Closure and disc = D(f) are checked.
OrderModule invariant_order(const NumberField& K);
/// The same order for an arbitrary root x of the polynomial g in K.
OrderModule invariant_order_of(const NumberField& K, const IntPoly& g, const NFElement& x);

/// p-maximality through the p-radical I_p = {x in O : x^(p^j) in pO}:
/// O is p-maximal iff (I_p : I_p) = O.
bool is_p_maximal(const NumberField& K, const OrderModule& O, unsigned long p);
/// Every prime p with p^2 | disc(O) is tested with is_p_maximal. Primes are
/// found by trial division, so |disc(O)| above 10^12 yields false (unknown).
bool is_maximal_order(const NumberField& K, const OrderModule& O);

struct FracIdeal {
  ZModuleInK module;
  OrderModule order;
};

FracIdeal unit_ideal(const OrderModule& O);
/// Z_x + x Z_x; invertibility is checked.
FracIdeal invariant_ideal(const NumberField& K);
FracIdeal invariant_ideal_of(const NumberField& K, const IntPoly& g, const NFElement& x);
FracIdeal principal_ideal(const NumberField& K, const OrderModule& O, const NFElement& x);
FracIdeal ideal_mul(const NumberField& K, const FracIdeal& I, const FracIdeal& J);
/// (O : I); throws NotInvertible when I (O : I) != O.
FracIdeal ideal_inverse(const NumberField& K, const FracIdeal& I);
/// |N(I)| = vol(I) / vol(O).
Rational ideal_norm(const FracIdeal& I);

struct PrincipalityResult {
  std::optional<NFElement> generator;  // empty: nothing found within the bound
  long long candidates_tested = 0;
};

/// Scans gamma = sum c_i b_i over the basis b_i of I with integer c_i in
/// [-bound, bound], in order of increasing max |c_i|, keeping those with
/// |N(gamma)| = N(I), and accepts the first with gamma O = I.
PrincipalityResult is_principal_bounded(const NumberField& K, const FracIdeal& I, long bound);

/// All roots of g in K (sorted), via a squarefree norm resultant
/// Res_X(f(X), g(Y - kX)) for the smallest k >= 0, factored over Z.
std::vector<NFElement> roots_in_field(const NumberField& K, const IntPoly& g);

}  // namespace polydisc
