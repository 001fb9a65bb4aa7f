#pragma once

#include <mpfr.h>

#include <string>

#include "polydisc/int_poly.hpp"

namespace polydisc {

/// Owning wrapper around an mpfr_t. Arithmetic operators round to nearest at
/// the larger of the operand precisions; the free functions taking an
/// mpfr_rnd_t let callers pick a direction.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(double x, mpfr_prec_t prec);
  BigFloat(const Integer& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const Rational& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
/// x^(1/k) for x >= 0.
BigFloat root(const BigFloat& x, unsigned long k, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat log(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat log10(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat pow(const BigFloat& x, const BigFloat& y, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat pow_ui(const BigFloat& x, unsigned long k, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, mpfr_prec_t prec);
BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, mpfr_prec_t prec);
BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, mpfr_prec_t prec);
/// 2^e at the given precision.
BigFloat exp2(long e, mpfr_prec_t prec = 64);
/// Nearest integer (ties away from zero).
Integer round_to_integer(const BigFloat& x);
Integer floor_to_integer(const BigFloat& x);

/// Upper bound on a non-negative quantity, kept at 64 bits and always rounded
/// up, so accumulated radii never undershoot.
class Mag {
 public:
  Mag() : v_(0.0, kPrec) {}
  explicit Mag(const BigFloat& x);  // upper bound of |x|
  static Mag from_double(double x) { return Mag(BigFloat(x, kPrec)); }

  const BigFloat& value() const { return v_; }
  double to_double() const { return mpfr_get_d(v_.get(), MPFR_RNDU); }
  bool is_zero() const { return v_.is_zero(); }

  friend Mag operator+(const Mag& a, const Mag& b);
  friend Mag operator*(const Mag& a, const Mag& b);
  Mag& operator+=(const Mag& o) { return *this = *this + o; }
  friend bool operator<(const Mag& a, const Mag& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Mag& a, const Mag& b) { return a.v_ <= b.v_; }

  static constexpr mpfr_prec_t kPrec = 64;

 private:
  BigFloat v_;
};

/// Relative rounding error bound |x| * 2^(1-prec) for a value just rounded to
/// nearest at `prec` bits.
Mag rounding_error(const BigFloat& x, mpfr_prec_t prec);

/// Real interval [mid - rad, mid + rad].
struct RealBall {
  BigFloat mid;
  Mag rad;

  RealBall() = default;
  RealBall(BigFloat m, Mag r) : mid(std::move(m)), rad(std::move(r)) {}
  static RealBall exact(const Integer& x, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mid.precision(); }
  BigFloat lower() const;  // rounded down
  BigFloat upper() const;  // rounded up
  bool is_positive() const;  // certified > 0
  bool contains_zero() const { return !is_positive() && !(-*this).is_positive(); }

  RealBall operator-() const { return {-mid, rad}; }
};

RealBall operator+(const RealBall& a, const RealBall& b);
RealBall operator-(const RealBall& a, const RealBall& b);
RealBall operator*(const RealBall& a, const RealBall& b);
/// Throws PrecisionExhausted when the divisor ball contains zero.
RealBall operator/(const RealBall& a, const RealBall& b);
/// x^(1/k) for a certified positive ball.
RealBall root(const RealBall& x, unsigned long k);
RealBall pow_ui(const RealBall& x, unsigned long k);
RealBall log(const RealBall& x);
/// Exact-input evaluation with one rounding.
RealBall sqrt_ball(const RealBall& x);

/// Complex disc {z : |z - mid| <= rad}.
struct ComplexBall {
  BigFloat re;
  BigFloat im;
  Mag rad;

  ComplexBall() = default;
  ComplexBall(BigFloat r, BigFloat i, Mag radius) : re(std::move(r)), im(std::move(i)), rad(std::move(radius)) {}
  static ComplexBall from_real(const RealBall& x, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return re.precision(); }
  ComplexBall conj() const { return {re, -im, rad}; }
  ComplexBall operator-() const { return {-re, -im, rad}; }
  /// |z| as a real ball.
  RealBall abs() const;
  RealBall abs_squared() const;
  RealBall real() const { return {re, rad}; }
  RealBall imag() const { return {im, rad}; }
  /// True when the discs are certified disjoint.
  bool disjoint_from(const ComplexBall& o) const;
  bool contains_zero() const;
  /// Upper bound of |z| over the ball.
  Mag magnitude_upper() const;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const RealBall& a, const ComplexBall& b);
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);

}  // namespace polydisc
