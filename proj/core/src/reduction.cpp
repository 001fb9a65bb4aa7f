#include "polydisc/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "polydisc/errors.hpp"
#include "polydisc/factor.hpp"

namespace polydisc {

LinearFactorization linear_factorization(const RootSystem& rs) {
  const int n = rs.degree();
  mpfr_prec_t p = rs.precision;
  const Integer& a0 = rs.poly.leading();
  LinearFactorization fac;
  fac.sign = a0 < 0 ? -1 : 1;
  fac.pairing = rs.pairing;
  fac.real_count = rs.real_count;
  RealBall abs_a0 = RealBall::exact(abs(a0), p);
  RealBall alpha = n == 1 ? abs_a0 : root(abs_a0, static_cast<unsigned long>(n));
  ComplexBall ca = ComplexBall::from_real(alpha, p);
  for (int i = 0; i < n; ++i) {
    fac.alphas.push_back(ca);
    fac.betas.push_back(ca * rs.roots[i]);
  }
  return fac;
}

DeltaTable delta_table(const LinearFactorization& fac) {
  const int n = fac.degree();
  mpfr_prec_t p = fac.alphas.empty() ? 64 : fac.alphas[0].precision();
  DeltaTable dt;
  dt.pairing = fac.pairing;
  dt.delta.assign(n, std::vector<ComplexBall>(n, ComplexBall{BigFloat(p), BigFloat(p), Mag()}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) dt.delta[i][j] = fac.alphas[i] * fac.betas[j] - fac.alphas[j] * fac.betas[i];
  return dt;
}

bool plucker_identity_holds(const DeltaTable& dt) {
  const int n = dt.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          ComplexBall e = dt(i, j) * dt(k, l) + dt(j, k) * dt(i, l) - dt(i, k) * dt(j, l);
          if (!e.contains_zero()) return false;
        }
  return true;
}

bool additive_identity_holds(const DeltaTable& dt) {
  const int n = dt.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (!(dt(i, j) + dt(j, k) - dt(i, k)).contains_zero()) return false;
      }
  return true;
}

ComplexBall delta_discriminant(const DeltaTable& dt) {
  const int n = dt.size();
  mpfr_prec_t p = n ? dt(0, 0).precision() : 64;
  ComplexBall prod{BigFloat(1.0, p), BigFloat(p), Mag()};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) prod = prod * dt(i, j) * dt(i, j);
  return prod;
}

namespace {

RealBall ball_union(const RealBall& x, const RealBall& y) {
  BigFloat mid = x.mid + y.mid;
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  Mag rx = x.rad + Mag(x.mid - mid) + rounding_error(mid, mid.precision());
  Mag ry = y.rad + Mag(y.mid - mid) + rounding_error(mid, mid.precision());
  return {mid, rx < ry ? ry : rx};
}

}  // namespace

WeightVector julia_weights(const DeltaTable& dt) {
  const int n = dt.size();
  if (n < 3) throw DomainError("julia_weights: degree must be at least 3");
  mpfr_prec_t p = dt(0, 1).precision();
  WeightVector w;
  for (int i = 0; i < n; ++i) {
    RealBall prod = RealBall::exact(1, p);
    for (int k = 0; k < n; ++k)
      if (k != i) prod = prod * dt(i, k).abs();
    w.t.push_back(n == 3 ? prod : root(prod, static_cast<unsigned long>(n - 2)));
  }
  for (int i = 0; i < n; ++i) {
    int j = dt.pairing.empty() ? i : dt.pairing[i];
    if (j > i) {
      RealBall u = ball_union(w.t[i], w.t[j]);
      w.t[i] = u;
      w.t[j] = u;
    }
  }
  return w;
}

RealBall weight_product(const WeightVector& w) {
  RealBall m = RealBall::exact(1, w.t.empty() ? 64 : w.t[0].precision());
  for (const auto& t : w.t) m = m * t;
  return m;
}

RealBQF covariant_form(const LinearFactorization& fac, const WeightVector& w) {
  const int n = fac.degree();
  mpfr_prec_t p = fac.alphas[0].precision();
  RealBall A = RealBall::exact(0, p), B = A, C = A;
  RealBall one = RealBall::exact(1, p), two = RealBall::exact(2, p);
  for (int i = 0; i < n; ++i) {
    RealBall wi = one / (w.t[i] * w.t[i]);
    A = A + wi * fac.alphas[i].abs_squared();
    B = B - two * wi * (fac.alphas[i] * fac.betas[i].conj()).real();
    C = C + wi * fac.betas[i].abs_squared();
  }
  return {A, B, C};
}

std::pair<IntPoly, Unimodular2> polish_height(const IntPoly& f) {
  const Unimodular2 inv{0, 1, 1, 0, 1};
  const Unimodular2 moves[4] = {Unimodular2::translation(1), Unimodular2::translation(-1),
                                compose(inv, Unimodular2::translation(1)), compose(inv, Unimodular2::translation(-1))};
  IntPoly cur = f;
  Unimodular2 u = Unimodular2::identity();
  Integer h = height(cur);
  for (;;) {
    int best = -1;
    IntPoly best_poly;
    Integer best_h = h;
    for (int k = 0; k < 4; ++k) {
      IntPoly cand = apply_gl2(cur, moves[k]);
      Integer ch = height(cand);
      if (ch < best_h) {
        best = k;
        best_h = ch;
        best_poly = std::move(cand);
      }
    }
    if (best < 0) break;
    cur = std::move(best_poly);
    u = compose(u, moves[best]);
    h = best_h;
  }
  return {cur, u};
}

namespace {

// x^q for x > 0, q > 0, both given with enclosures; q as a [lo, hi] pair.
RealBall pow_ball(const RealBall& x, const BigFloat& q_lo, const BigFloat& q_hi) {
  if (!x.is_positive()) throw PrecisionExhausted("pow_ball: base not certified positive");
  mpfr_prec_t p = x.precision();
  BigFloat xl = x.lower(), xu = x.upper();
  BigFloat cands_lo[4] = {pow(xl, q_lo, MPFR_RNDD), pow(xl, q_hi, MPFR_RNDD), pow(xu, q_lo, MPFR_RNDD),
                          pow(xu, q_hi, MPFR_RNDD)};
  BigFloat cands_hi[4] = {pow(xl, q_lo, MPFR_RNDU), pow(xl, q_hi, MPFR_RNDU), pow(xu, q_lo, MPFR_RNDU),
                          pow(xu, q_hi, MPFR_RNDU)};
  BigFloat lo = cands_lo[0], hi = cands_hi[0];
  for (int k = 1; k < 4; ++k) {
    if (cands_lo[k] < lo) lo = cands_lo[k];
    if (cands_hi[k] > hi) hi = cands_hi[k];
  }
  BigFloat mid = add(lo, hi, MPFR_RNDN, p);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  BigFloat d1(Mag::kPrec), d2(Mag::kPrec);
  mpfr_sub(d1.get(), hi.get(), mid.get(), MPFR_RNDU);
  mpfr_sub(d2.get(), mid.get(), lo.get(), MPFR_RNDU);
  return {mid, d1 > d2 ? Mag(d1) : Mag(d2)};
}

RealBall pow_rational(const RealBall& x, long num, long den) {
  mpfr_prec_t p = x.precision();
  BigFloat lo(p), hi(p);
  mpfr_set_si(lo.get(), num, MPFR_RNDN);
  mpfr_div_si(lo.get(), lo.get(), den, MPFR_RNDD);
  mpfr_set_si(hi.get(), num, MPFR_RNDN);
  mpfr_div_si(hi.get(), hi.get(), den, MPFR_RNDU);
  return pow_ball(x, lo, hi);
}

struct Attempt {
  LinearFactorization fac;
  DeltaTable dt;
  WeightVector w;
  ReducedRealBQF red;
};

Attempt run_numeric(const IntPoly& f, long prec) {
  RootSystem rs = isolate_roots(f, prec);
  Attempt a;
  a.fac = linear_factorization(rs);
  a.dt = delta_table(a.fac);
  a.w = julia_weights(a.dt);
  RealBQF phi = covariant_form(a.fac, a.w);
  a.red = gauss_reduce_real(phi);
  return a;
}

}  // namespace

PolynomialReduction reduce_polynomial(const IntPoly& f, long precision) {
  const int n = f.degree();
  if (n < 3) throw DomainError("reduce_polynomial: degree must be at least 3 (use reduce_quadratic)");
  if (content(f) != 1) throw DomainError("reduce_polynomial: polynomial is not primitive");
  Integer D = discriminant(f);
  if (D == 0) throw DomainError("reduce_polynomial: zero discriminant");

  long p = std::max<long>(precision, 128);
  Attempt at;
  for (;;) {
    try {
      at = run_numeric(f, p);
      break;
    } catch (const PrecisionExhausted&) {
      if (p >= 8192) throw;
      p = std::min<long>(2 * p, 8192);
    }
  }

  PolynomialReduction out;
  out.precision_used = p;
  IntPoly g0 = apply_gl2(f, at.red.witness);
  out.height_before_polish = height(g0);
  auto [g, v] = polish_height(g0);
  out.g = g;
  out.witness = compose(at.red.witness, v);
  if (!verify_gl2_witness(f, out.g, out.witness) || discriminant(out.g) != D)
    throw InternalError("reduce_polynomial: witness does not verify");

  mpfr_prec_t bp = at.w.t[0].precision();
  out.M = weight_product(at.w);
  RealBall sum = RealBall::exact(0, bp);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RealBall tt = at.w.t[i] * at.w.t[j];
      sum = sum + at.dt(i, j).abs_squared() / (tt * tt);
    }
  out.R = sqrt_ball(sum);
  out.rational_root = has_rational_root(f);

  RealBall three = RealBall::exact(3, bp);
  RealBall nn = RealBall::exact(n, bp);
  RealBall mr = out.M * out.M * pow_ui(out.R, static_cast<unsigned long>(n));
  if (!out.rational_root) {
    RealBall c = RealBall::exact(4, bp) / (nn * sqrt_ball(three));
    out.bound = pow_ui(c, static_cast<unsigned long>(n)) * mr;
  } else {
    RealBall c1 = RealBall::exact(2, bp) / sqrt_ball(nn);
    RealBall c2 = RealBall::exact(2, bp) / sqrt_ball(three * RealBall::exact(n - 1, bp));
    out.bound = pow_ui(c1, static_cast<unsigned long>(n)) * pow_rational(c2, n * (n - 1), n - 2) *
                pow_rational(mr, n - 1, n - 2);
  }
  out.bound_holds = BigFloat(height(out.g), bp) <= out.bound.lower();

  BoundReport& r = out.report;
  r.name = "reduced-height";
  r.branch = out.rational_root ? "rational root" : "no rational root";
  r.degree = n;
  r.abs_disc = abs(D);
  r.log10_bound = log10(out.bound.mid);
  r.details.push_back({"M", out.M.mid.to_string(25)});
  r.details.push_back({"R", out.R.mid.to_string(25)});
  r.details.push_back({"bound", out.bound.mid.to_string(25)});
  r.details.push_back({"precision", std::to_string(p)});
  return out;
}

BigFloat hermite_cubic_invariant(const IntPoly& f, mpfr_prec_t precision) {
  if (f.degree() != 3) throw DomainError("hermite_cubic_invariant: degree must be 3");
  Integer D = discriminant(f);
  if (D == 0) throw DomainError("hermite_cubic_invariant: zero discriminant");
  return root(BigFloat(Integer(abs(27 * D)), precision), 4);
}

RealBall hermite_cubic_invariant_numeric(const IntPoly& f, long precision) {
  if (f.degree() != 3) throw DomainError("hermite_cubic_invariant_numeric: degree must be 3");
  RootSystem rs = isolate_roots(f, precision);
  mpfr_prec_t p = rs.precision;
  ComplexBall prod{BigFloat(1.0, p), BigFloat(p), Mag()};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      ComplexBall d = rs.roots[i] - rs.roots[j];
      prod = prod * d * d;
    }
  Integer a4 = f.leading() * f.leading() * f.leading() * f.leading() * 27;
  RealBall v = RealBall::exact(a4, p) * prod.abs();
  return root(v, 4);
}

// ---------------------------------------------------------------------------

namespace {

using i128 = __int128;
using cd = std::complex<double>;

void cubic_roots(const double c[4], cd z[3]) {
  double h = std::max({std::fabs(c[0]), std::fabs(c[1]), std::fabs(c[2]), std::fabs(c[3])});
  double radius = 1.0 + h / std::fabs(c[3]);
  for (int k = 0; k < 3; ++k) z[k] = std::polar(radius, 2.0 * M_PI * k / 3 + 0.4);
  for (int it = 0; it < 200; ++it) {
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      cd v = ((c[3] * z[i] + c[2]) * z[i] + c[1]) * z[i] + c[0];
      cd d = (3.0 * c[3] * z[i] + 2.0 * c[2]) * z[i] + c[1];
      if (v == cd(0)) continue;
      cd w = v / d;
      cd s = 0;
      for (int j = 0; j < 3; ++j)
        if (j != i && z[i] != z[j]) s += 1.0 / (z[i] - z[j]);
      cd corr = w / (1.0 - w * s);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
      z[i] -= corr;
      worst = std::max(worst, std::abs(corr) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }
}

void apply_small(const i128 f[4], const long long u[4], int sign, i128 g[4]) {
  // sum f_k (aX + b)^k (cX + d)^(3-k), ascending output
  i128 p[4][4] = {}, q[4][4] = {};
  p[0][0] = q[0][0] = 1;
  for (int k = 1; k <= 3; ++k)
    for (int j = 0; j <= k; ++j) {
      p[k][j] = (j < k ? p[k - 1][j] * u[1] : 0) + (j > 0 ? p[k - 1][j - 1] * u[0] : 0);
      q[k][j] = (j < k ? q[k - 1][j] * u[3] : 0) + (j > 0 ? q[k - 1][j - 1] * u[2] : 0);
    }
  for (int j = 0; j < 4; ++j) g[j] = 0;
  for (int k = 0; k <= 3; ++k) {
    if (f[k] == 0) continue;
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= 3 - k; ++j) g[i + j] += f[k] * p[k][i] * q[3 - k][j];
  }
  if (sign < 0)
    for (int j = 0; j < 4; ++j) g[j] = -g[j];
}

i128 height_small(const i128 g[4]) {
  i128 h = 0;
  for (int j = 0; j < 4; ++j) h = std::max(h, g[j] < 0 ? -g[j] : g[j]);
  return h;
}

void compose_small(long long u[4], const long long v[4]) {
  long long a = u[0] * v[0] + u[1] * v[2], b = u[0] * v[1] + u[1] * v[3];
  long long c = u[2] * v[0] + u[3] * v[2], d = u[2] * v[1] + u[3] * v[3];
  u[0] = a;
  u[1] = b;
  u[2] = c;
  u[3] = d;
}

}  // namespace

bool reduce_cubic_fast(const std::array<long long, 4>& f, FastCubicReduction* out) {
  if (f[3] == 0) return false;
  double c[4] = {double(f[0]), double(f[1]), double(f[2]), double(f[3])};
  cd z[3];
  cubic_roots(c, z);
  double A = 0, B = 0, C = 0;
  for (int i = 0; i < 3; ++i) {
    double t = std::abs(z[i] - z[(i + 1) % 3]) * std::abs(z[i] - z[(i + 2) % 3]);
    if (!(t > 0) || !std::isfinite(t)) return false;
    double w = 1.0 / (t * t);
    A += w;
    B -= 2.0 * w * z[i].real();
    C += w * std::norm(z[i]);
  }
  long long u[4] = {1, 0, 0, 1};
  for (int it = 0; it < 200; ++it) {
    double t = std::floor((A - B) / (2.0 * A));
    if (std::fabs(t) > 1e6) return false;
    if (t != 0) {
      long long ti = static_cast<long long>(t);
      C = A * t * t + B * t + C;
      B = B + 2.0 * A * t;
      long long step[4] = {1, ti, 0, 1};
      compose_small(u, step);
    }
    if (A > C) {
      std::swap(A, C);
      B = -B;
      long long step[4] = {0, -1, 1, 0};
      compose_small(u, step);
      continue;
    }
    break;
  }
  for (long long e : u)
    if (e > 1000000 || e < -1000000) return false;
  i128 fi[4] = {f[0], f[1], f[2], f[3]};
  i128 g[4];
  apply_small(fi, u, 1, g);

  // polish: translations by +-1 and inversion followed by a translation
  const long long moves[4][4] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {0, 1, 1, 1}, {0, 1, 1, -1}};
  i128 h = height_small(g);
  for (int guard = 0; guard < 100000; ++guard) {
    int best = -1;
    i128 best_g[4];
    i128 best_h = h;
    for (int k = 0; k < 4; ++k) {
      i128 cand[4];
      apply_small(g, moves[k], 1, cand);
      i128 ch = height_small(cand);
      if (ch < best_h) {
        best = k;
        best_h = ch;
        for (int j = 0; j < 4; ++j) best_g[j] = cand[j];
      }
    }
    if (best < 0) break;
    for (int j = 0; j < 4; ++j) g[j] = best_g[j];
    compose_small(u, moves[best]);
    h = best_h;
  }
  const i128 lim = static_cast<i128>(1) << 62;
  for (int j = 0; j < 4; ++j) {
    if (g[j] > lim || g[j] < -lim) return false;
    out->g[j] = static_cast<long long>(g[j]);
    out->witness[j] = u[j];
  }
  return true;
}

}  // namespace polydisc
