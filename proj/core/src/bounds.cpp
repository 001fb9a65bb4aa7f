#include "polydisc/bounds.hpp"

#include <cmath>
#include <unordered_map>

#include "polydisc/errors.hpp"

namespace polydisc {

namespace {

constexpr mpfr_prec_t P = kBoundPrecision;

BigFloat log10_e() {
  BigFloat one(1.0, P), e(P);
  mpfr_exp(e.get(), one.get(), MPFR_RNDN);
  return log10(e);
}

BigFloat big(const Integer& x) { return BigFloat(x, P); }
BigFloat big(double x) { return BigFloat(x, P); }

// log10 of an integer, memoized for small values; the quadratic and cubic
// bounds are evaluated once per polynomial in bulk sweeps.
BigFloat log10_int(const Integer& x) {
  constexpr std::size_t kCacheCap = 1 << 16;
  thread_local std::unordered_map<long, BigFloat> cache;
  if (!x.fits_slong_p()) return log10(big(x));
  long k = x.get_si();
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  BigFloat v = log10(big(x));
  if (cache.size() < kCacheCap) cache.emplace(k, v);
  return v;
}

BoundReport make(const std::string& name, const std::string& branch, int n, const Integer& D) {
  BoundReport r;
  r.name = name;
  r.branch = branch;
  r.degree = n;
  r.abs_disc = abs(D);
  return r;
}

}  // namespace

double BoundReport::value() const {
  BigFloat ten(10.0, P);
  return pow(ten, log10_bound).to_double();
}

BoundReport bound_quadratic_height(const Integer& D, bool reducible) {
  if (D == 0) throw DomainError("bound_quadratic_height: zero discriminant");
  BigFloat lg = log10_int(abs(D));
  if (D < 0) {
    BoundReport r = make("quadratic", "D<0: |D|/3", 2, D);
    r.log10_bound = lg - log10_int(3);
    return r;
  }
  if (!reducible) {
    BoundReport r = make("quadratic", "D>0 irreducible: |D|/4", 2, D);
    r.log10_bound = lg - log10_int(4);
    return r;
  }
  BoundReport r = make("quadratic", "D>0 reducible: D^(1/2)", 2, D);
  r.log10_bound = lg / big(2.0);
  return r;
}

BoundReport bound_monic_quadratic_height(const Integer& D) {
  if (D == 0) throw DomainError("bound_monic_quadratic_height: zero discriminant");
  BoundReport r = make("monic-quadratic", "monic: |D|/4+1", 2, D);
  r.log10_bound = log10(big(abs(D)) / big(4.0) + big(1.0));
  return r;
}

BoundReport bound_cubic_height(const Integer& D, bool reducible) {
  if (D == 0) throw DomainError("bound_cubic_height: zero discriminant");
  BigFloat ad = big(abs(D));
  if (!reducible) {
    BoundReport r = make("cubic", "irreducible: (64/27)|D|^(1/2)", 3, D);
    r.log10_bound = log10(big(64.0) / big(27.0) * sqrt(ad));
    return r;
  }
  BoundReport r = make("cubic", "reducible: (64/(3 sqrt 3))|D|", 3, D);
  r.log10_bound = log10(big(64.0) / (big(3.0) * sqrt(big(3.0))) * ad);
  return r;
}

BoundReport bound_monic_equivalence_height(int n, const Integer& abs_disc) {
  if (n < 2) throw DomainError("bound_monic_equivalence_height: degree must be at least 2");
  if (abs_disc < 1) throw DomainError("bound_monic_equivalence_height: |D| must be at least 1");
  BoundReport r = make("monic-z", "monic, Z-equivalence", n, abs_disc);
  BigFloat ad = big(abs_disc);
  BigFloat L = log(ad);
  BigFloat one = big(1.0);
  if (L < one) {
    L = one;
    r.log_clamped = true;
  }
  BigFloat inner = ad * pow_ui(L, static_cast<unsigned long>(n));
  BigFloat exponent = pow_ui(big(static_cast<double>(n)), 20) * pow_ui(big(8.0), static_cast<unsigned long>(n * n + 19)) *
                      pow_ui(inner, static_cast<unsigned long>(n - 1));
  r.log10_bound = exponent * log10_e();
  return r;
}

BoundReport bound_gl2_equivalence_height(int n, const Integer& abs_disc) {
  if (n < 2) throw DomainError("bound_gl2_equivalence_height: degree must be at least 2");
  if (abs_disc < 1) throw DomainError("bound_gl2_equivalence_height: |D| must be at least 1");
  BoundReport r = make("gl2", "GL2(Z)-equivalence", n, abs_disc);
  BigFloat base = big(16.0 * n * n * n);
  BigFloat exponent = pow_ui(base, static_cast<unsigned long>(25 * n * n)) *
                      pow_ui(big(abs_disc), static_cast<unsigned long>(5 * n - 3));
  r.log10_bound = exponent * log10_e();
  return r;
}

int max_degree_for_discriminant(const Integer& abs_disc, bool monic) {
  if (abs_disc < 1) throw DomainError("max_degree_for_discriminant: |D| must be at least 1");
  Integer sq = abs_disc * abs_disc;
  Integer p = 3;
  int k = 0;
  while (p <= sq) {
    p *= 3;
    ++k;
  }
  return (monic ? 2 : 3) + k;
}

}  // namespace polydisc
