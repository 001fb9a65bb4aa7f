#include "polydisc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polydisc/errors.hpp"

namespace polydisc {

namespace {

using cd = std::complex<double>;

struct CF {
  BigFloat re, im;
};

CF cf_add(const CF& a, const CF& b) { return {a.re + b.re, a.im + b.im}; }
CF cf_sub(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
CF cf_mul(const CF& a, const CF& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
CF cf_div(const CF& a, const CF& b) {
  BigFloat n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
BigFloat cf_abs(const CF& a) {
  BigFloat r(a.re.precision());
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN);
  return r;
}
CF cf_with_prec(const CF& a, mpfr_prec_t p) {
  CF r{BigFloat(p), BigFloat(p)};
  mpfr_set(r.re.get(), a.re.get(), MPFR_RNDN);
  mpfr_set(r.im.get(), a.im.get(), MPFR_RNDN);
  return r;
}

void horner(const std::vector<BigFloat>& c, const CF& z, CF* val, CF* der) {
  mpfr_prec_t p = z.re.precision();
  CF v{BigFloat(p), BigFloat(p)}, d{BigFloat(p), BigFloat(p)};
  for (std::size_t k = c.size(); k-- > 0;) {
    d = cf_add(cf_mul(d, z), v);
    v = cf_mul(v, z);
    v.re = v.re + c[k];
  }
  *val = std::move(v);
  *der = std::move(d);
}

// One Aberth sweep; returns the largest relative correction.
double aberth_sweep(const std::vector<BigFloat>& c, std::vector<CF>& z) {
  const std::size_t n = z.size();
  double worst = 0;
  mpfr_prec_t p = z[0].re.precision();
  for (std::size_t i = 0; i < n; ++i) {
    CF v, d;
    horner(c, z[i], &v, &d);
    if (v.re.is_zero() && v.im.is_zero()) continue;
    CF w = cf_div(v, d);
    CF s{BigFloat(p), BigFloat(p)};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      CF diff = cf_sub(z[i], z[j]);
      if (diff.re.is_zero() && diff.im.is_zero()) continue;
      CF one{BigFloat(1.0, p), BigFloat(p)};
      s = cf_add(s, cf_div(one, diff));
    }
    CF one{BigFloat(1.0, p), BigFloat(p)};
    CF corr = cf_div(w, cf_sub(one, cf_mul(w, s)));
    z[i] = cf_sub(z[i], corr);
    BigFloat mag = cf_abs(z[i]);
    double scale = std::max(1.0, mag.to_double());
    worst = std::max(worst, cf_abs(corr).to_double() / scale);
  }
  return worst;
}

cd horner_d(const std::vector<double>& c, cd z, cd* der) {
  cd v = 0, d = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    d = d * z + v;
    v = v * z + c[k];
  }
  *der = d;
  return v;
}

}  // namespace

std::vector<std::complex<double>> approximate_roots(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw DomainError("approximate_roots: degree must be at least 1");
  std::vector<double> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = f[k].get_d();
  double h = height(f).get_d();
  double radius = 1.0 + h / std::fabs(c[n]);
  std::vector<cd> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius, 2.0 * M_PI * k / n + 0.4);
  for (int it = 0; it < 500; ++it) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      cd d;
      cd v = horner_d(c, z[i], &d);
      if (v == cd(0)) continue;
      cd w = v / d;
      cd s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i && z[i] != z[j]) s += 1.0 / (z[i] - z[j]);
      cd corr = w / (1.0 - w * s);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
      z[i] -= corr;
      worst = std::max(worst, std::abs(corr) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

ComplexBall eval_ball(const IntPoly& f, const ComplexBall& z) {
  mpfr_prec_t p = z.precision();
  ComplexBall acc{BigFloat(p), BigFloat(p), Mag()};
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * z;
    acc = acc + ComplexBall::from_real(RealBall::exact(f[k], p), p);
  }
  return acc;
}

RootSystem isolate_roots(const IntPoly& f, long precision_bits) {
  const int n = f.degree();
  if (n < 1) throw DomainError("isolate_roots: degree must be at least 1");
  if (discriminant(f) == 0) throw DomainError("isolate_roots: polynomial is not square-free");
  if (precision_bits < 1) throw DomainError("isolate_roots: precision must be positive");

  std::vector<cd> approx = approximate_roots(f);
  mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits + 64, 128);
  const mpfr_prec_t cap = 16 * prec + 8192;

  std::vector<CF> z;
  for (const auto& a : approx) z.push_back({BigFloat(a.real(), prec), BigFloat(a.imag(), prec)});

  BigFloat target = exp2(-precision_bits);
  for (; prec <= cap; prec *= 2) {
    std::vector<BigFloat> c;
    for (int k = 0; k <= n; ++k) c.emplace_back(f[k], prec);
    for (auto& x : z) x = cf_with_prec(x, prec);
    double tol = std::ldexp(1.0, -static_cast<int>(std::min<mpfr_prec_t>(prec - 8, 1000)));
    for (int it = 0; it < 200; ++it)
      if (aberth_sweep(c, z) < tol) break;

    // Weierstrass corrections W_i = f(z_i) / (a_0 prod (z_i - z_j)); the
    // discs D(z_i, n|W_i|) cover the roots and disjoint discs hold one each.
    std::vector<ComplexBall> balls;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      ComplexBall zi{z[i].re, z[i].im, Mag()};
      ComplexBall num = eval_ball(f, zi);
      ComplexBall den = ComplexBall::from_real(RealBall::exact(f.leading(), prec), prec);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        den = den * (zi - ComplexBall{z[j].re, z[j].im, Mag()});
      }
      if (den.contains_zero()) {
        ok = false;
        break;
      }
      ComplexBall w = num / den;
      Mag r = Mag::from_double(static_cast<double>(n)) * w.magnitude_upper();
      if (!(r.value() <= target)) ok = false;
      balls.push_back({z[i].re, z[i].im, r});
    }
    if (!ok) continue;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (!balls[i].disjoint_from(balls[j])) ok = false;
    if (!ok) continue;

    // Conjugation is an involution on the roots of a real polynomial.
    std::vector<int> pairing(n, -1);
    for (int i = 0; i < n && ok; ++i) {
      ComplexBall cj = balls[i].conj();
      std::vector<int> hits;
      for (int j = 0; j < n; ++j)
        if (j != i && !cj.disjoint_from(balls[j])) hits.push_back(j);
      if (hits.empty()) {
        pairing[i] = i;
      } else if (hits.size() == 1 && Mag(balls[i].im).value() > balls[i].rad.value()) {
        pairing[i] = hits[0];
      } else {
        ok = false;
      }
    }
    for (int i = 0; i < n && ok; ++i)
      if (pairing[pairing[i]] != i) ok = false;
    if (!ok) continue;

    for (int i = 0; i < n; ++i) {
      if (pairing[i] != i) continue;
      Mag extra(balls[i].im);
      balls[i].rad += extra;
      balls[i].im = BigFloat(prec);
      if (!(balls[i].rad.value() <= target)) ok = false;
    }
    if (!ok) continue;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> reals, tops;
    for (int i = 0; i < n; ++i) {
      if (pairing[i] == i)
        reals.push_back(i);
      else if (balls[i].im.sign() > 0)
        tops.push_back(i);
    }
    std::sort(reals.begin(), reals.end(), [&](int a, int b) { return balls[a].re < balls[b].re; });
    std::sort(tops.begin(), tops.end(), [&](int a, int b) {
      if (balls[a].re < balls[b].re) return true;
      if (balls[b].re < balls[a].re) return false;
      return balls[a].im < balls[b].im;
    });
    order.clear();
    for (int i : reals) order.push_back(i);
    for (int i : tops) {
      order.push_back(i);
      order.push_back(pairing[i]);
    }
    RootSystem rs;
    rs.poly = f;
    rs.precision = prec;
    rs.real_count = static_cast<int>(reals.size());
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[order[k]] = k;
    for (int k = 0; k < n; ++k) {
      rs.roots.push_back(balls[order[k]]);
      rs.pairing.push_back(pos[pairing[order[k]]]);
    }
    return rs;
  }
  throw PrecisionExhausted("isolate_roots: could not certify root isolation for " + f.to_string());
}

}  // namespace polydisc
