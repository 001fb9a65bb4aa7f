#pragma once

#include <vector>

#include "polydisc/int_poly.hpp"

namespace polydisc {

struct Factor {
  IntPoly poly;  // primitive, positive leading coefficient
  int multiplicity = 1;
};

struct Factorization {
  Integer unit;  // signed content: f = unit * prod(poly^multiplicity)
  std::vector<Factor> factors;

  IntPoly product() const;
};

/// Square-free decomposition of a primitive polynomial with positive leading
/// coefficient: returns pairs (g_i, i) with f = prod g_i^i, each g_i
/// square-free, primitive and non-constant.
std::vector<Factor> squarefree_decomposition(const IntPoly& f);

/// Complete factorization over the integers (Zassenhaus: modular factoring,
/// Hensel lifting, recombination). Factors are sorted by degree, then by
/// descending coefficient list.
Factorization factor_over_z(const IntPoly& f);

/// Requires deg f >= 1 and content 1 (DomainError otherwise).
bool is_irreducible(const IntPoly& f);

/// Distinct integer roots of f (f non-zero).
std::vector<Integer> integer_roots(const IntPoly& f);
/// True when f has a root in Q.
bool has_rational_root(const IntPoly& f);

}  // namespace polydisc
