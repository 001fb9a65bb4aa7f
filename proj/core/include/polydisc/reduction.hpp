#pragma once

#include <array>
#include <vector>

#include "polydisc/bigfloat.hpp"
#include "polydisc/bounds.hpp"
#include "polydisc/equivalence.hpp"
#include "polydisc/quadforms.hpp"
#include "polydisc/roots.hpp"

namespace polydisc {

/// f = sign * prod_i (alpha_i X - beta_i).
///
/// alpha_i = |a_0|^(1/n) for every i and beta_i = alpha_i * root_i, so that
/// prod_{i<j} Delta_ij^2 = D(f) exactly and M = |D|^(1/(n-2)). For monic f
/// this is alpha_i = 1, beta_i = root_i.
struct LinearFactorization {
  std::vector<ComplexBall> alphas;
  std::vector<ComplexBall> betas;
  std::vector<int> pairing;  // conjugation involution, fixed points are real
  int real_count = 0;
  int sign = 1;

  int degree() const { return static_cast<int>(alphas.size()); }
};

LinearFactorization linear_factorization(const RootSystem& rs);

/// Delta_ij = alpha_i beta_j - alpha_j beta_i.
struct DeltaTable {
  std::vector<std::vector<ComplexBall>> delta;
  std::vector<int> pairing;

  int size() const { return static_cast<int>(delta.size()); }
  const ComplexBall& operator()(int i, int j) const { return delta[i][j]; }
};

DeltaTable delta_table(const LinearFactorization& fac);
/// Every quadruple of distinct indices satisfies
/// Delta_ij Delta_kl + Delta_jk Delta_il = Delta_ik Delta_jl within ball error.
bool plucker_identity_holds(const DeltaTable& dt);
/// Delta_ij + Delta_jk = Delta_ik within ball error (monic factorizations).
bool additive_identity_holds(const DeltaTable& dt);
/// prod_{i<j} Delta_ij^2 as a ball.
ComplexBall delta_discriminant(const DeltaTable& dt);

struct WeightVector {
  std::vector<RealBall> t;
};

/// t_i = (prod_{k != i} |Delta_ik|)^(1/(n-2)), made equal on conjugate pairs.
WeightVector julia_weights(const DeltaTable& dt);
/// M = t_1 ... t_n.
RealBall weight_product(const WeightVector& w);

/// Phi = sum t_i^-2 (alpha_i X - beta_i Y)(conj(alpha_i) X - conj(beta_i) Y).
RealBQF covariant_form(const LinearFactorization& fac, const WeightVector& w);

struct PolynomialReduction {
  IntPoly g;
  Unimodular2 witness;  // apply_gl2(f, witness) == g
  BoundReport report;
  RealBall M;            // prod t_i
  RealBall R;            // (sum_{i<j} |Delta_ij|^2 / (t_i^2 t_j^2))^(1/2)
  RealBall bound;        // branch bound on H(g)
  bool rational_root = false;
  bool bound_holds = false;
  long precision_used = 0;
  Integer height_before_polish;
};

/// Roots -> linear factors -> Julia weights -> covariant form -> certified
/// Gauss reduction -> exact pull-back -> height polish. The precision starts
/// at max(precision, 128) and doubles on PrecisionExhausted up to 8192 bits.
PolynomialReduction reduce_polynomial(const IntPoly& f, long precision = 128);

/// Greedy descent over translations by +-1 and inversion followed by a
/// translation, accepting only strict height decreases.
std::pair<IntPoly, Unimodular2> polish_height(const IntPoly& f);

/// |27 D(f)|^(1/4) from the integer discriminant.
BigFloat hermite_cubic_invariant(const IntPoly& f, mpfr_prec_t precision = 256);
/// The same quantity from certified roots: |27 a0^4 prod_{i<j}(r_i - r_j)^2|^(1/4).
RealBall hermite_cubic_invariant_numeric(const IntPoly& f, long precision = 256);

/// Double-precision cubic reduction for bulk sweeps. Coefficients ascending,
/// |coefficients| small enough that the pulled-back polynomial fits in 64
/// bits (checked; returns false otherwise). The pull-back and polish are
/// exact integer operations on the returned witness.
struct FastCubicReduction {
  std::array<long long, 4> g{};
  std::array<long long, 4> witness{};  // a, b, c, d
};
bool reduce_cubic_fast(const std::array<long long, 4>& f, FastCubicReduction* out);

}  // namespace polydisc
