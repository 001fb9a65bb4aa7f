#include "polydisc/bigfloat.hpp"

#include <algorithm>
#include <vector>

#include "polydisc/errors.hpp"

namespace polydisc {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double x, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, x.get_mpz_t(), rnd);
}

BigFloat::BigFloat(const Rational& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, x.get_mpq_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  return add(a, b, MPFR_RNDN, std::max(a.precision(), b.precision()));
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  return mul(a, b, MPFR_RNDN, std::max(a.precision(), b.precision()));
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  return div(a, b, MPFR_RNDN, std::max(a.precision(), b.precision()));
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), rnd);
  return r;
}

BigFloat root(const BigFloat& x, unsigned long k, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), k, rnd);
  return r;
}

BigFloat log(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_log(r.get(), x.get(), rnd);
  return r;
}

BigFloat log10(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_log10(r.get(), x.get(), rnd);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y, mpfr_rnd_t rnd) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), rnd);
  return r;
}

BigFloat pow_ui(const BigFloat& x, unsigned long k, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_pow_ui(r.get(), x.get(), k, rnd);
  return r;
}

BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_add(r.get(), a.get(), b.get(), rnd);
  return r;
}

BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_mul(r.get(), a.get(), b.get(), rnd);
  return r;
}

BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_div(r.get(), a.get(), b.get(), rnd);
  return r;
}

BigFloat exp2(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

Integer round_to_integer(const BigFloat& x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDNA);
  return z;
}

Integer floor_to_integer(const BigFloat& x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDD);
  return z;
}

// ---------------------------------------------------------------------------

Mag::Mag(const BigFloat& x) : v_(kPrec) { mpfr_abs(v_.get(), x.get(), MPFR_RNDU); }

Mag operator+(const Mag& a, const Mag& b) {
  Mag r;
  mpfr_add(r.v_.get(), a.v_.get(), b.v_.get(), MPFR_RNDU);
  return r;
}

Mag operator*(const Mag& a, const Mag& b) {
  Mag r;
  mpfr_mul(r.v_.get(), a.v_.get(), b.v_.get(), MPFR_RNDU);
  return r;
}

Mag rounding_error(const BigFloat& x, mpfr_prec_t prec) {
  Mag m(x);
  BigFloat t = m.value();
  mpfr_mul_2si(t.get(), t.get(), 1 - static_cast<long>(prec), MPFR_RNDU);
  return Mag(t);
}

namespace {

// Upper bound of hi - lo.
Mag diff_upper(const BigFloat& hi, const BigFloat& lo) {
  BigFloat d(Mag::kPrec);
  mpfr_sub(d.get(), hi.get(), lo.get(), MPFR_RNDU);
  return Mag(d);
}

Mag hypot_upper(const BigFloat& a, const BigFloat& b) {
  BigFloat h(Mag::kPrec);
  mpfr_hypot(h.get(), a.get(), b.get(), MPFR_RNDU);
  return Mag(h);
}

BigFloat hypot_lower(const BigFloat& a, const BigFloat& b) {
  BigFloat h(Mag::kPrec);
  mpfr_hypot(h.get(), a.get(), b.get(), MPFR_RNDD);
  return h;
}

// Build a ball from certified endpoints lo <= hi.
RealBall from_endpoints(const BigFloat& lo, const BigFloat& hi, mpfr_prec_t prec) {
  BigFloat mid = add(lo, hi, MPFR_RNDN, prec);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  Mag r1 = diff_upper(hi, mid), r2 = diff_upper(mid, lo);
  return {mid, r1 < r2 ? r2 : r1};
}

}  // namespace

RealBall RealBall::exact(const Integer& x, mpfr_prec_t prec) {
  BigFloat m(prec);
  int inexact = mpfr_set_z(m.get(), x.get_mpz_t(), MPFR_RNDN);
  return {m, inexact ? rounding_error(m, prec) : Mag()};
}

BigFloat RealBall::lower() const {
  BigFloat r(precision());
  mpfr_sub(r.get(), mid.get(), rad.value().get(), MPFR_RNDD);
  return r;
}

BigFloat RealBall::upper() const {
  BigFloat r(precision());
  mpfr_add(r.get(), mid.get(), rad.value().get(), MPFR_RNDU);
  return r;
}

bool RealBall::is_positive() const { return lower().sign() > 0; }

RealBall operator+(const RealBall& a, const RealBall& b) {
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  BigFloat m = add(a.mid, b.mid, MPFR_RNDN, p);
  return {m, a.rad + b.rad + rounding_error(m, p)};
}

RealBall operator-(const RealBall& a, const RealBall& b) { return a + (-b); }

RealBall operator*(const RealBall& a, const RealBall& b) {
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  BigFloat m = mul(a.mid, b.mid, MPFR_RNDN, p);
  Mag r = Mag(a.mid) * b.rad + Mag(b.mid) * a.rad + a.rad * b.rad + rounding_error(m, p);
  return {m, r};
}

RealBall operator/(const RealBall& a, const RealBall& b) {
  if (b.contains_zero()) throw PrecisionExhausted("ball division by a ball containing zero");
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  BigFloat m = div(a.mid, b.mid, MPFR_RNDN, p);
  BigFloat bm = abs(b.mid);
  BigFloat gap(Mag::kPrec);
  mpfr_sub(gap.get(), bm.get(), b.rad.value().get(), MPFR_RNDD);
  BigFloat denom(Mag::kPrec);
  mpfr_mul(denom.get(), gap.get(), bm.get(), MPFR_RNDD);
  Mag num = Mag(a.mid) * b.rad + Mag(b.mid) * a.rad;
  BigFloat q(Mag::kPrec);
  mpfr_div(q.get(), num.value().get(), denom.get(), MPFR_RNDU);
  return {m, Mag(q) + rounding_error(m, p)};
}

RealBall root(const RealBall& x, unsigned long k) {
  if (!x.is_positive()) throw PrecisionExhausted("root of a ball not certified positive");
  mpfr_prec_t p = x.precision();
  BigFloat lo = root(x.lower(), k, MPFR_RNDD);
  BigFloat hi = root(x.upper(), k, MPFR_RNDU);
  return from_endpoints(lo, hi, p);
}

RealBall log(const RealBall& x) {
  if (!x.is_positive()) throw PrecisionExhausted("log of a ball not certified positive");
  mpfr_prec_t p = x.precision();
  return from_endpoints(log(x.lower(), MPFR_RNDD), log(x.upper(), MPFR_RNDU), p);
}

RealBall pow_ui(const RealBall& x, unsigned long k) {
  RealBall r{BigFloat(1.0, x.precision()), Mag()};
  RealBall b = x;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

RealBall sqrt_ball(const RealBall& x) { return root(x, 2); }

// ---------------------------------------------------------------------------

ComplexBall ComplexBall::from_real(const RealBall& x, mpfr_prec_t prec) {
  BigFloat re(prec);
  mpfr_set(re.get(), x.mid.get(), MPFR_RNDN);
  Mag r = x.rad;
  if (prec < x.precision()) r += rounding_error(re, prec);
  return {re, BigFloat(prec), r};
}

RealBall ComplexBall::abs() const {
  mpfr_prec_t p = precision();
  BigFloat m(p);
  mpfr_hypot(m.get(), re.get(), im.get(), MPFR_RNDN);
  return {m, rad + rounding_error(m, p)};
}

RealBall ComplexBall::abs_squared() const {
  mpfr_prec_t p = precision();
  BigFloat m = re * re + im * im;
  Mag mod = hypot_upper(re, im);
  Mag two = Mag::from_double(2.0);
  Mag r = two * mod * rad + rad * rad + rounding_error(m, p - 2);
  return {m, r};
}

bool ComplexBall::contains_zero() const {
  BigFloat lo = hypot_lower(re, im);
  return lo <= rad.value();
}

bool ComplexBall::disjoint_from(const ComplexBall& o) const { return !(*this - o).contains_zero(); }

Mag ComplexBall::magnitude_upper() const { return hypot_upper(re, im) + rad; }

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  BigFloat re = add(a.re, b.re, MPFR_RNDN, p);
  BigFloat im = add(a.im, b.im, MPFR_RNDN, p);
  Mag r = a.rad + b.rad + rounding_error(re, p) + rounding_error(im, p);
  return {re, im, r};
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return a + (-b); }

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  BigFloat re = a.re * b.re - a.im * b.im;
  BigFloat im = a.re * b.im + a.im * b.re;
  Mag ma = hypot_upper(a.re, a.im), mb = hypot_upper(b.re, b.im);
  BigFloat rnd = (ma * mb).value();
  mpfr_mul_2si(rnd.get(), rnd.get(), 3 - static_cast<long>(p), MPFR_RNDU);
  Mag r = ma * b.rad + mb * a.rad + a.rad * b.rad + Mag(rnd);
  return {re, im, r};
}

ComplexBall operator*(const RealBall& a, const ComplexBall& b) {
  return ComplexBall::from_real(a, std::max(a.precision(), b.precision())) * b;
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  if (b.contains_zero()) throw PrecisionExhausted("ball division by a ball containing zero");
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  BigFloat n2 = b.re * b.re + b.im * b.im;
  BigFloat ire = b.re / n2;
  BigFloat iim = -(b.im / n2);
  // |1/b - 1/m| <= r / (|m| (|m| - r)), plus rounding of the reciprocal.
  BigFloat lo = hypot_lower(b.re, b.im);
  BigFloat gap(Mag::kPrec);
  mpfr_sub(gap.get(), lo.get(), b.rad.value().get(), MPFR_RNDD);
  BigFloat denom(Mag::kPrec);
  mpfr_mul(denom.get(), gap.get(), lo.get(), MPFR_RNDD);
  BigFloat q(Mag::kPrec);
  mpfr_div(q.get(), b.rad.value().get(), denom.get(), MPFR_RNDU);
  BigFloat inv_mag(Mag::kPrec);
  mpfr_ui_div(inv_mag.get(), 1, lo.get(), MPFR_RNDU);
  mpfr_mul_2si(inv_mag.get(), inv_mag.get(), 3 - static_cast<long>(p), MPFR_RNDU);
  ComplexBall inv{ire, iim, Mag(q) + Mag(inv_mag)};
  return a * inv;
}

}  // namespace polydisc
