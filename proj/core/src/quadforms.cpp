#include "polydisc/quadforms.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "polydisc/errors.hpp"

namespace polydisc {

IntBQF IntBQF::from_poly(const IntPoly& f) {
  if (f.degree() > 2) throw DomainError("IntBQF::from_poly: degree exceeds 2");
  return {f[2], f[1], f[0]};
}

std::string to_string(const IntBQF& q) {
  std::ostringstream os;
  os << '(' << q.A << ',' << q.B << ',' << q.C << ')';
  return os.str();
}

IntBQF parse_bqf(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("cannot parse form '" + std::string(text) + "'");
  std::vector<Integer> v;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ParseError("cannot parse form '" + std::string(text) + "'");
    if (tok[0] == '+') tok.erase(0, 1);
    Integer x;
    if (x.set_str(tok, 10) != 0) throw ParseError("cannot parse form '" + std::string(text) + "'");
    v.push_back(x);
  }
  if (v.size() != 3) throw ParseError("cannot parse form '" + std::string(text) + "'");
  return {v[0], v[1], v[2]};
}

IntBQF transform(const IntBQF& q, const Unimodular2& u) {
  // q(aX + bY, cX + dY)
  IntBQF r;
  r.A = q.A * u.a * u.a + q.B * u.a * u.c + q.C * u.c * u.c;
  r.B = 2 * q.A * u.a * u.b + q.B * (u.a * u.d + u.b * u.c) + 2 * q.C * u.c * u.d;
  r.C = q.A * u.b * u.b + q.B * u.b * u.d + q.C * u.d * u.d;
  if (u.sign < 0) {
    r.A = -r.A;
    r.B = -r.B;
    r.C = -r.C;
  }
  return r;
}

bool is_gauss_reduced(const IntBQF& q) {
  if (!(abs(q.B) <= q.A && q.A <= q.C)) return false;
  if (q.B == -q.A) return false;
  if (q.A == q.C && q.B < 0) return false;
  return true;
}

ReducedBQF gauss_reduce(const IntBQF& q) {
  if (q.A <= 0 || q.disc() >= 0) throw DomainError("gauss_reduce: form " + to_string(q) + " is not positive definite");
  IntBQF cur = q;
  Unimodular2 u = Unimodular2::identity();
  for (;;) {
    // B + 2At in (-A, A]
    Integer t;
    Integer num = cur.A - cur.B, den = 2 * cur.A;
    mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (t != 0) {
      cur = {cur.A, cur.B + 2 * cur.A * t, cur.A * t * t + cur.B * t + cur.C};
      u = compose(u, Unimodular2::translation(t));
    }
    if (cur.A > cur.C || (cur.A == cur.C && cur.B < 0)) {
      cur = {cur.C, -cur.B, cur.A};
      u = compose(u, Unimodular2::swap());
      continue;
    }
    break;
  }
  return {cur, u};
}

// ---------------------------------------------------------------------------

RealBQF transform(const RealBQF& q, const Unimodular2& u) {
  mpfr_prec_t p = q.A.precision();
  RealBall a = RealBall::exact(u.a, p), b = RealBall::exact(u.b, p);
  RealBall c = RealBall::exact(u.c, p), d = RealBall::exact(u.d, p);
  RealBall two = RealBall::exact(2, p);
  RealBQF r{q.A * a * a + q.B * a * c + q.C * c * c,
            two * q.A * a * b + q.B * (a * d + b * c) + two * q.C * c * d,
            q.A * b * b + q.B * b * d + q.C * d * d};
  if (u.sign < 0) r = {-r.A, -r.B, -r.C};
  return r;
}

namespace {

enum class Cmp { Less, Greater, Unknown };

// Certified comparison of x against y.
Cmp compare(const RealBall& x, const RealBall& y) {
  RealBall d = x - y;
  if (d.is_positive()) return Cmp::Greater;
  if ((-d).is_positive()) return Cmp::Less;
  return Cmp::Unknown;
}

RealBall abs_ball(const RealBall& x) { return x.mid.sign() < 0 ? -x : x; }

void require_small_radius(const RealBQF& q) {
  // slack accepted when a comparison is undecided: radii below 2^-16 A
  Mag tot = q.A.rad + q.B.rad + q.C.rad;
  BigFloat lim = q.A.mid;
  mpfr_mul_2si(lim.get(), lim.get(), -16, MPFR_RNDD);
  if (!(tot.value() <= lim)) throw PrecisionExhausted("gauss_reduce_real: comparison undecidable at this precision");
}

}  // namespace

ReducedRealBQF gauss_reduce_real(const RealBQF& q) {
  mpfr_prec_t p = q.A.precision();
  RealBall four = RealBall::exact(4, p);
  RealBall disc = q.B * q.B - four * q.A * q.C;
  if (!q.A.is_positive() || !(-disc).is_positive()) {
    if ((-q.A).is_positive() || disc.is_positive()) throw DomainError("gauss_reduce_real: form is not positive definite");
    throw PrecisionExhausted("gauss_reduce_real: definiteness not certified");
  }
  RealBQF cur = q;
  Unimodular2 u = Unimodular2::identity();
  for (int it = 0; it < 100000; ++it) {
    Cmp bc = compare(abs_ball(cur.B), cur.A);
    if (bc == Cmp::Greater) {
      BigFloat twoA = cur.A.mid + cur.A.mid;
      Integer t = floor_to_integer((cur.A.mid - cur.B.mid) / twoA);
      if (t == 0) throw PrecisionExhausted("gauss_reduce_real: translation undetermined");
      Unimodular2 step = Unimodular2::translation(t);
      cur = transform(cur, step);
      u = compose(u, step);
      continue;
    }
    if (bc == Cmp::Unknown) require_small_radius(cur);
    Cmp ac = compare(cur.A, cur.C);
    if (ac == Cmp::Greater) {
      cur = {cur.C, -cur.B, cur.A};
      u = compose(u, Unimodular2::swap());
      continue;
    }
    if (ac == Cmp::Unknown) require_small_radius(cur);
    return {cur, u};
  }
  throw PrecisionExhausted("gauss_reduce_real: no convergence");
}

// ---------------------------------------------------------------------------

namespace {

Integer form_height(const IntBQF& q) {
  Integer h = abs(q.A);
  if (abs(q.B) > h) h = abs(q.B);
  if (abs(q.C) > h) h = abs(q.C);
  return h;
}

// rho step of an indefinite form with non-square D; r = isqrt(D).
// (a, b, c) -> (c, b', a - b s + c s^2) with b' = -b + 2cs normalized.
std::pair<IntBQF, Unimodular2> rho(const IntBQF& q, const Integer& r) {
  Integer c = q.C;
  Integer ac = abs(c);
  Integer lo = ac > r ? Integer(-ac + 1) : Integer(r + 1 - 2 * ac);
  Integer m = 2 * ac;
  Integer off;
  Integer delta = -q.B - lo;
  mpz_fdiv_r(off.get_mpz_t(), delta.get_mpz_t(), m.get_mpz_t());
  Integer bnew = lo + off;
  Integer s = (bnew + q.B) / (2 * c);
  IntBQF out{c, bnew, q.A - q.B * s + c * s * s};
  return {out, Unimodular2{0, -1, 1, s, 1}};
}

// Same step on machine integers; valid while |a|, |b|, |c|, r < 2^30, so the
// new C = (b'^2 - D) / 4c stays below 2^62.
struct SmallForm {
  long a, b, c;
};

bool fits_small(const IntBQF& q, const Integer& r) {
  auto ok = [](const Integer& x) { return x.fits_slong_p() && std::labs(x.get_si()) < (1L << 30); };
  return ok(q.A) && ok(q.B) && ok(q.C) && ok(r);
}

long rho_small(SmallForm& q, long r) {
  long ac = std::labs(q.c);
  long lo = ac > r ? -ac + 1 : r + 1 - 2 * ac;
  long m = 2 * ac;
  long off = (-q.b - lo) % m;
  if (off < 0) off += m;
  long bnew = lo + off;
  long s = (bnew + q.b) / (2 * q.c);
  __int128 cn = static_cast<__int128>(q.a) - static_cast<__int128>(q.b) * s + static_cast<__int128>(q.c) * s * s;
  q = {q.c, bnew, static_cast<long>(cn)};
  return s;
}

bool is_reduced_indefinite(const IntBQF& q, const Integer& r) {
  if (q.B <= 0 || q.B > r) return false;
  Integer a2 = 2 * abs(q.A);
  return a2 >= r - q.B + 1 && a2 <= r + q.B;
}

struct CycleResult {
  IntBQF form;
  Unimodular2 witness;
};

CycleResult reduce_indefinite(const IntBQF& q) {
  Integer D = q.disc();
  Integer r = sqrt(D);
  // Walk the cycle keeping only the rho parameters; the witness of the
  // lowest form is composed once at the end.
  std::vector<Integer> steps;
  IntBQF cur = q, best = q;
  std::size_t best_at = 0;
  Integer best_h = form_height(cur);
  auto consider = [&] {
    Integer h = form_height(cur);
    if (h < best_h) {
      best_h = h;
      best = cur;
      best_at = steps.size();
    }
  };
  const bool small_r = r.fits_slong_p() && r < Integer(1L << 30);
  auto advance = [&] {
    if (small_r && fits_small(cur, r)) {
      SmallForm sf{cur.A.get_si(), cur.B.get_si(), cur.C.get_si()};
      steps.emplace_back(rho_small(sf, r.get_si()));
      cur = IntBQF{sf.a, sf.b, sf.c};
      return;
    }
    auto [nx, step] = rho(cur, r);
    cur = std::move(nx);
    steps.push_back(std::move(step.d));
  };
  while (!is_reduced_indefinite(cur, r)) {
    advance();
    consider();
    if (steps.size() > 100000) throw InternalError("reduce_indefinite: reduction did not terminate");
  }
  IntBQF start = cur;
  const std::size_t cap = steps.size() + 1000000;
  for (;;) {
    advance();
    if (cur == start) break;
    consider();
    if (steps.size() > cap) throw InternalError("reduce_indefinite: cycle too long");
  }
  Unimodular2 u = Unimodular2::identity();
  for (std::size_t k = 0; k < best_at; ++k) u = compose(u, Unimodular2{0, -1, 1, steps[k], 1});
  return {best, u};
}

}  // namespace

QuadraticReduction reduce_quadratic(const IntPoly& f) {
  if (f.degree() != 2) throw DomainError("reduce_quadratic: degree must be 2");
  Integer D = discriminant(f);
  if (D == 0) throw DomainError("reduce_quadratic: zero discriminant");
  QuadraticReduction out;
  IntBQF q = IntBQF::from_poly(f);
  Integer absD = abs(D);
  if (D < 0) {
    int sign = q.A > 0 ? 1 : -1;
    IntBQF pos = sign > 0 ? q : IntBQF{-q.A, -q.B, -q.C};
    ReducedBQF red = gauss_reduce(pos);
    out.witness = red.witness;
    out.witness.sign = sign;
    out.report = bound_quadratic_height(D, false);
    out.g = apply_gl2(f, out.witness);
    out.bound_holds = 3 * height(out.g) <= absD;
  } else {
    auto [cont, prim] = content_and_primitive(f);
    Integer Dp = discriminant(prim);
    Integer s = sqrt(Dp);
    if (s * s == Dp) {
      // Rational root beta/alpha of the primitive part.
      const Integer& a = prim[2];
      Integer num = -prim[1] + s, den = 2 * a;
      Integer g = gcd(num, den);
      Integer alpha = den / g, beta = num / g;
      if (alpha < 0) {
        alpha = -alpha;
        beta = -beta;
      }
      Integer gg, x, y;
      mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
      // x*alpha + y*beta = 1: columns (x, -y) and (beta, alpha), determinant 1.
      Unimodular2 u{x, beta, -y, alpha, 1};
      IntPoly h = apply_gl2(prim, u);  // = X (gamma X + delta), up to the constant term vanishing
      Integer gamma = h[2], delta = h[1];
      // (X, Y) -> (X, tX + Y): gamma -> gamma + delta t, into (0, |delta|].
      Integer ad = abs(delta);
      Integer t;
      Integer shifted = ad - gamma;
      mpz_fdiv_q(t.get_mpz_t(), shifted.get_mpz_t(), ad.get_mpz_t());
      if (delta < 0) t = -t;
      Unimodular2 v{1, 0, t, 1, 1};
      out.witness = compose(u, v);
      out.report = bound_quadratic_height(D, true);
      out.g = apply_gl2(f, out.witness);
      Integer H = height(out.g);
      out.bound_holds = H * H <= absD;
    } else {
      CycleResult cyc = reduce_indefinite(IntBQF::from_poly(prim));
      out.witness = cyc.witness;
      out.report = bound_quadratic_height(D, false);
      out.g = apply_gl2(f, out.witness);
      out.bound_holds = 4 * height(out.g) <= absD;
    }
    (void)cont;
  }
  if (!out.witness.valid()) throw InternalError("reduce_quadratic: witness is not unimodular");
  return out;
}

MonicQuadraticReduction reduce_monic_quadratic(const IntPoly& f) {
  if (f.degree() != 2 || f.leading() != 1) throw DomainError("reduce_monic_quadratic: input must be a monic quadratic");
  Integer D = discriminant(f);
  if (D == 0) throw DomainError("reduce_monic_quadratic: zero discriminant");
  MonicQuadraticReduction out;
  Integer a;
  mpz_fdiv_q_2exp(a.get_mpz_t(), f[1].get_mpz_t(), 1);
  out.shift = {-a, false};
  out.g = apply_zshift(f, out.shift);
  out.report = bound_monic_quadratic_height(D);
  out.bound_holds = 4 * height(out.g) <= abs(D) + 4;
  return out;
}

}  // namespace polydisc
