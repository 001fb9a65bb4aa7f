#include "polydisc/hermite.hpp"

#include <sstream>

#include "polydisc/errors.hpp"
#include "polydisc/factor.hpp"
#include "polydisc/roots.hpp"

namespace polydisc {

namespace {

RatMatrix companion(const IntPoly& f) {
  const int n = f.degree();
  RatMatrix c(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = Rational(-f[i], f.leading());
  for (int i = 0; i < n; ++i) c(i, n - 1).canonicalize();
  return c;
}

Integer ipow(const Integer& x, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

}  // namespace

MultiPoly associated_form(const IntPoly& f) {
  const int n = f.degree();
  if (n < 2) throw DomainError("associated_form: degree must be at least 2");
  if (content(f) != 1) throw DomainError("associated_form: polynomial is not primitive");
  if (discriminant(f) == 0) throw DomainError("associated_form: polynomial is not squarefree");
  RatMatrix c = companion(f);
  std::vector<RatMatrix> powers{RatMatrix::identity(n)};
  for (int j = 1; j < n; ++j) powers.push_back(powers.back() * c);
  // entry (r, s) of sum_j X_j C^(j-1)
  auto entry = [&](int r, int s) {
    MultiPoly e(n);
    MultiPoly::Exponents ex(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
      ex[j] = 1;
      e.add_term(ex, powers[j](r, s));
      ex[j] = 0;
    }
    return e;
  };
  // Laplace expansion over column subsets, one row at a time
  std::vector<MultiPoly> dp(1U << n, MultiPoly(n));
  dp[0] = MultiPoly::constant(n, 1);
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (dp[mask].is_zero()) continue;
    int r = __builtin_popcount(mask);
    if (r == n) continue;
    for (int s = 0; s < n; ++s) {
      if (mask & (1U << s)) continue;
      int above = __builtin_popcount(mask >> (s + 1));
      MultiPoly t = dp[mask] * entry(r, s);
      if (above % 2) t = -t;
      dp[mask | (1U << s)] += t;
    }
  }
  MultiPoly F = dp[(1U << n) - 1];
  F *= Rational(ipow(f.leading(), static_cast<unsigned long>(n - 1)));
  if (!F.is_integral()) throw InternalError("associated_form: non-integral coefficient");
  return F;
}

Integer decomposable_discriminant(const MultiPoly& F, const IntPoly& f) {
  const int n = f.degree();
  if (!(F == associated_form(f))) throw DomainError("decomposable_discriminant: form is not the associated form of f");
  // power sums of the roots via Newton's identities
  std::vector<Rational> e(static_cast<std::size_t>(n + 1));  // monic coefficients, descending
  std::vector<Integer> desc = f.descending();
  for (int i = 0; i <= n; ++i) {
    e[i] = Rational(desc[i], desc[0]);
    e[i].canonicalize();
  }
  std::vector<Rational> p(static_cast<std::size_t>(2 * n - 1));
  p[0] = n;
  for (int k = 1; k <= 2 * n - 2; ++k) {
    Rational s = 0;
    for (int i = 1; i < k && i <= n; ++i) s += e[i] * p[k - i];
    if (k <= n) s += k * e[k];
    p[k] = -s;
  }
  RatMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = p[i + j];
  Rational v = determinant(h) * Rational(ipow(f.leading(), static_cast<unsigned long>(2 * n - 2)));
  if (v.get_den() != 1) throw InternalError("decomposable_discriminant: non-integral value");
  Integer value = v.get_num();
  if (value != discriminant(f)) throw InternalError("decomposable_discriminant: differs from D(f)");

  RootSystem rs = isolate_roots(f, 128);
  mpfr_prec_t prec = rs.precision;
  ComplexBall prod{BigFloat(1.0, prec), BigFloat(prec), Mag()};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ComplexBall d = rs.roots[i] - rs.roots[j];
      prod = prod * d * d;
    }
  prod = RealBall::exact(ipow(f.leading(), static_cast<unsigned long>(2 * n - 2)), prec) * prod;
  ComplexBall diff = prod - ComplexBall::from_real(RealBall::exact(value, prec), prec);
  if (!diff.contains_zero()) throw InternalError("decomposable_discriminant: numeric cross-check failed");
  return value;
}

std::string to_string(const UnimodularN& u) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < u.m.rows(); ++i) {
    if (i) out << ",";
    out << "[";
    for (std::size_t j = 0; j < u.m.cols(); ++j) {
      if (j) out << ",";
      out << u.m(i, j).get_str();
    }
    out << "]";
  }
  out << "]," << u.sign;
  return out.str();
}

bool verify_hermite_witness(const IntPoly& f, const IntPoly& g, const UnimodularN& u) {
  const int n = f.degree();
  if (g.degree() != n || static_cast<int>(u.m.rows()) != n || static_cast<int>(u.m.cols()) != n) return false;
  if (u.sign != 1 && u.sign != -1) return false;
  Integer det = determinant(u.m);
  if (det != 1 && det != -1) return false;
  if (discriminant(f) != discriminant(g)) return false;
  MultiPoly lhs = associated_form(g);
  MultiPoly rhs = substitute_linear(associated_form(f), u.m);
  if (u.sign < 0) rhs = -rhs;
  return lhs == rhs;
}

UnimodularN lift_gl2_witness(const IntPoly& f, const Unimodular2& u) {
  const int n = f.degree();
  IntPoly g = apply_gl2(f, u);
  if (g.degree() != n) throw DomainError("lift_gl2_witness: the transform lowers the degree");
  IntPoly lin1(std::vector<Integer>{u.a, Integer(-u.c)});  // a - c alpha
  IntPoly lin2(std::vector<Integer>{Integer(-u.b), u.d});  // d alpha - b
  UnimodularN w;
  w.m = IntMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    IntPoly p = IntPoly::constant(1);
    for (int i = 0; i < n - 1 - k; ++i) p = p * lin1;
    for (int i = 0; i < k; ++i) p = p * lin2;
    for (int j = 0; j < n; ++j) w.m(j, k) = p[j];  // transpose of t
  }
  MultiPoly lhs = associated_form(g);
  MultiPoly rhs = substitute_linear(associated_form(f), w.m);
  if (lhs == rhs) {
    w.sign = 1;
  } else if (lhs == -rhs) {
    w.sign = -1;
  } else {
    throw InternalError("lift_gl2_witness: lifted matrix does not relate the associated forms");
  }
  return w;
}

std::string to_string(HermiteVerdict v) {
  switch (v) {
    case HermiteVerdict::Equivalent:
      return "equivalent";
    case HermiteVerdict::NotEquivalent:
      return "not-equivalent";
    case HermiteVerdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

void check_input(const IntPoly& f, const char* who) {
  if (f.degree() < 2) throw DomainError(std::string(who) + ": degree must be at least 2");
  if (!is_irreducible(f)) throw DomainError(std::string(who) + ": polynomial is reducible");
}

}  // namespace

HermiteDecision hermite_equivalent(const IntPoly& f, const IntPoly& g, long search_bound) {
  check_input(f, "hermite_equivalent");
  check_input(g, "hermite_equivalent");
  HermiteDecision out;
  if (f.degree() != g.degree()) {
    out.verdict = HermiteVerdict::NotEquivalent;
    out.reason = "degree";
    return out;
  }
  if (discriminant(f) != discriminant(g)) {
    out.verdict = HermiteVerdict::NotEquivalent;
    out.reason = "discriminant";
    return out;
  }
  NumberField K(f);
  auto roots = roots_in_field(K, g);
  out.candidate_roots = static_cast<int>(roots.size());
  if (roots.empty()) {
    out.verdict = HermiteVerdict::NotEquivalent;
    out.reason = "no common field";
    return out;
  }
  OrderModule Oa = invariant_order(K);
  FracIdeal Ia = invariant_ideal(K);
  bool inconclusive = false;
  for (const auto& beta : roots) {
    OrderModule Ob = invariant_order_of(K, g, beta);
    if (!(Ob.module == Oa.module)) continue;
    FracIdeal Ib = invariant_ideal_of(K, g, beta);
    Ib.order = Oa;
    FracIdeal J = ideal_mul(K, Ia, ideal_inverse(K, Ib));
    PrincipalityResult pr = is_principal_bounded(K, J, search_bound);
    if (pr.generator) {
      out.verdict = HermiteVerdict::Equivalent;
      out.beta = beta;
      out.gamma = pr.generator;
      return out;
    }
    inconclusive = true;
  }
  if (inconclusive) {
    out.verdict = HermiteVerdict::Unknown;
    out.reason = "principality not decided within bound";
  } else {
    out.verdict = HermiteVerdict::NotEquivalent;
    out.reason = "invariant orders differ";
  }
  return out;
}

bool monic_hermite_equivalent(const IntPoly& f, const IntPoly& g) {
  if (!f.is_monic() || !g.is_monic()) throw DomainError("monic_hermite_equivalent: polynomials must be monic");
  check_input(f, "monic_hermite_equivalent");
  check_input(g, "monic_hermite_equivalent");
  if (f.degree() != g.degree() || discriminant(f) != discriminant(g)) return false;
  NumberField K(f);
  ZModuleInK za = power_module(K, nf_generator(K));
  for (const auto& beta : roots_in_field(K, g))
    if (power_module(K, beta) == za) return true;
  return false;
}

}  // namespace polydisc
