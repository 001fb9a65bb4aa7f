#include "polydisc/cns.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polydisc/errors.hpp"

namespace polydisc {

CnsBase make_cns_base(const IntPoly& min_poly) {
  if (min_poly.degree() < 1) throw DomainError("cns: base polynomial must have degree at least 1");
  if (!min_poly.is_monic()) throw DomainError("cns: base polynomial must be monic");
  Integer b = abs(min_poly[0]);
  if (b < 2) throw DomainError("cns: |N(alpha)| must be at least 2");
  return {min_poly, b};
}

namespace {

// (z - d) / alpha for a digit d with d = z_0 mod c_0.
void divide_out(const CnsBase& base, CnsVector& z, const Integer& d) {
  const IntPoly& p = base.min_poly;
  const int n = p.degree();
  Integer q = (z[0] - d) / p[0];
  for (int i = 0; i + 1 < n; ++i) z[i] = z[i + 1] - q * p[i + 1];
  z[n - 1] = -q;
}

bool is_zero(const CnsVector& z) {
  return std::all_of(z.begin(), z.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

Integer cns_step(const CnsBase& base, CnsVector& z) {
  if (static_cast<int>(z.size()) != base.min_poly.degree()) throw DomainError("cns: coordinate vector has wrong length");
  Integer d;
  mpz_fdiv_r(d.get_mpz_t(), z[0].get_mpz_t(), base.digit_bound.get_mpz_t());
  divide_out(base, z, d);
  return d;
}

CnsExpansion cns_expand(const CnsBase& base, const CnsVector& z, long step_cap) {
  CnsExpansion out;
  out.state = z;
  for (long k = 0; k < step_cap; ++k) {
    if (is_zero(out.state)) {
      out.terminated = true;
      return out;
    }
    out.digits.push_back(cns_step(base, out.state));
  }
  out.terminated = is_zero(out.state);
  return out;
}

CnsVector cns_reconstruct(const CnsBase& base, const std::vector<Integer>& digits) {
  const IntPoly& p = base.min_poly;
  const int n = p.degree();
  CnsVector z(static_cast<std::size_t>(n), Integer(0));
  // Horner: z <- z * alpha + d, from the top digit down
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    Integer top = z[n - 1];
    for (int i = n - 1; i >= 1; --i) z[i] = z[i - 1] - top * p[i];
    z[0] = -top * p[0];
    z[0] += *it;
  }
  return z;
}

std::string to_string(CnsVerdict v) {
  switch (v) {
    case CnsVerdict::IsCNS:
      return "cns";
    case CnsVerdict::NotCNS:
      return "not-cns";
    case CnsVerdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

CnsDecision is_cns_base(const CnsBase& base, std::size_t cap) {
  const int n = base.min_poly.degree();
  CnsDecision out;
  std::set<CnsVector> closure;
  std::vector<CnsVector> work;
  auto push = [&](const CnsVector& v) {
    if (closure.insert(v).second) work.push_back(v);
  };
  push(CnsVector(static_cast<std::size_t>(n), Integer(0)));
  for (int j = 0; j < n; ++j)
    for (int s : {1, -1}) {
      CnsVector e(static_cast<std::size_t>(n), Integer(0));
      e[j] = s;
      push(e);
    }
  while (!work.empty()) {
    if (closure.size() > cap) {
      out.closure_size = closure.size();
      return out;
    }
    CnsVector z = work.back();
    work.pop_back();
    Integer d;
    mpz_fdiv_r(d.get_mpz_t(), z[0].get_mpz_t(), base.digit_bound.get_mpz_t());
    CnsVector a = z, b = z;
    divide_out(base, a, d);
    divide_out(base, b, d - base.digit_bound);
    push(a);
    push(b);
  }
  out.closure_size = closure.size();
  // E is closed under the digit map, so each orbit stays in E and either
  // reaches 0 or enters a cycle.
  std::map<CnsVector, int> state;  // 1: known to reach 0
  for (const auto& start : closure) {
    std::vector<CnsVector> path;
    std::map<CnsVector, std::size_t> seen;
    CnsVector z = start;
    for (;;) {
      if (is_zero(z) || state.count(z)) break;
      auto it = seen.find(z);
      if (it != seen.end()) {
        out.verdict = CnsVerdict::NotCNS;
        out.cycle.assign(path.begin() + static_cast<long>(it->second), path.end());
        return out;
      }
      seen[z] = path.size();
      path.push_back(z);
      cns_step(base, z);
    }
    for (const auto& p : path) state[p] = 1;
  }
  out.verdict = CnsVerdict::IsCNS;
  return out;
}

}  // namespace polydisc
