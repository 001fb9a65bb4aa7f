#pragma once

#include <optional>
#include <string>

#include "polydisc/equivalence.hpp"
#include "polydisc/multipoly.hpp"
#include "polydisc/numberfield.hpp"

namespace polydisc {

/// [f](X_1, ..., X_n) = a_0^(n-1) prod_i (X_1 + alpha_i X_2 + ... + alpha_i^(n-1) X_n),
/// computed as a_0^(n-1) det(X_1 I + X_2 C + ... + X_n C^(n-1)) for the
/// companion matrix C of f / a_0. Requires f primitive, squarefree, deg >= 2.
MultiPoly associated_form(const IntPoly& f);

/// D([f]) = a_0^(2n-2) det(alpha_i^(j-1))^2, evaluated exactly as
/// a_0^(2n-2) det(p_(i+j)) from the power sums p_k of the roots. Checks that F
/// is [f], that the value equals D(f), and that it lies in the ball
/// a_0^(2n-2) prod_{i<j} (alpha_i - alpha_j)^2 from certified roots.
Integer decomposable_discriminant(const MultiPoly& F, const IntPoly& f);

struct UnimodularN {
  IntMatrix m;
  int sign = 1;
};

std::string to_string(const UnimodularN& u);

/// True iff det U = +-1 and [g](X) = sign * [f](U X) as polynomials.
bool verify_hermite_witness(const IntPoly& f, const IntPoly& g, const UnimodularN& u);

/// For g = apply_gl2(f, u), the matrix t^T with
/// t(k, j) = coefficient of alpha^j in (a - c alpha)^(n-1-k) (d alpha - b)^k,
/// signed so that [g](X) = sign * [f](t^T X).
UnimodularN lift_gl2_witness(const IntPoly& f, const Unimodular2& u);

enum class HermiteVerdict { Equivalent, NotEquivalent, Unknown };
std::string to_string(HermiteVerdict v);

struct HermiteDecision {
  HermiteVerdict verdict = HermiteVerdict::Unknown;
  std::string reason;            // for NotEquivalent / Unknown
  std::optional<NFElement> beta;   // root of g in Q[X]/(f) used as evidence
  std::optional<NFElement> gamma;  // I_alpha = gamma I_beta
  int candidate_roots = 0;
};

/// Decides Hermite equivalence of primitive irreducible f and g: equal
/// discriminants, a root beta of g in Q(alpha) with Z_alpha = Z_beta, and
/// I_alpha I_beta^-1 principal (searched with the given coordinate bound).
HermiteDecision hermite_equivalent(const IntPoly& f, const IntPoly& g, long search_bound = 64);

/// Monic f, g: true iff some root beta of g in Q(alpha) has Z[alpha] = Z[beta].
bool monic_hermite_equivalent(const IntPoly& f, const IntPoly& g);

}  // namespace polydisc
