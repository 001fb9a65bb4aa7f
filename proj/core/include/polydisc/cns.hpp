#pragma once

#include <string>
#include <vector>

#include "polydisc/int_poly.hpp"

namespace polydisc {

/// Base alpha with monic minimal polynomial X^n + c_(n-1) X^(n-1) + ... + c_0
/// and digits {0, ..., |c_0| - 1}.
struct CnsBase {
  IntPoly min_poly;
  Integer digit_bound;
};

/// Checks monic, degree >= 1 and |c_0| >= 2.
CnsBase make_cns_base(const IntPoly& min_poly);

using CnsVector = std::vector<Integer>;  // power-basis coordinates

/// One backward division z -> (z - d) / alpha with d = z_0 mod |c_0|.
/// Returns the digit and replaces z.
Integer cns_step(const CnsBase& base, CnsVector& z);

struct CnsExpansion {
  bool terminated = false;
  std::vector<Integer> digits;  // little-endian
  CnsVector state;              // where the iteration stopped
};

CnsExpansion cns_expand(const CnsBase& base, const CnsVector& z, long step_cap = 10000);
/// sum digits[k] alpha^k in power-basis coordinates.
CnsVector cns_reconstruct(const CnsBase& base, const std::vector<Integer>& digits);

enum class CnsVerdict { IsCNS, NotCNS, Inconclusive };
std::string to_string(CnsVerdict v);

struct CnsDecision {
  CnsVerdict verdict = CnsVerdict::Inconclusive;
  std::vector<CnsVector> cycle;  // non-zero periodic orbit for NotCNS
  std::size_t closure_size = 0;
};

/// Closure E of {+-e_j} under z -> (z - d)/alpha for both admissible
/// digits d (z_0 mod |c_0| and that minus |c_0|). Every integer vector then
/// has an orbit ending in an orbit from E, so the base is a CNS iff all of E
/// reaches 0. Returns Inconclusive when |E| exceeds cap.
CnsDecision is_cns_base(const CnsBase& base, std::size_t cap = 200000);

}  // namespace polydisc
