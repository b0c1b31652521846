#pragma once

#include <llterm/numeric.hpp>

#include <string>

namespace llterm {

// Complex disc with dyadic center (re + i im) * 2^-prec and radius rad * 2^-prec.
// Every operation returns a disc containing all possible exact results.
class Ball {
 public:
  Ball() = default;
  explicit Ball(long prec) : prec_(prec) {}
  Ball(long prec, Integer re, Integer im, Integer rad)
      : prec_(prec), re_(std::move(re)), im_(std::move(im)), rad_(std::move(rad)) {}

  static Ball from_rational(const Rational& re, const Rational& im, long prec);
  static Ball from_rational(const Rational& re, long prec) { return from_rational(re, Rational(0), prec); }
  static Ball from_integer(const Integer& v, long prec) { return Ball(prec, shift(v, prec), 0, 0); }

  long precision() const { return prec_; }
  const Integer& re_mant() const { return re_; }
  const Integer& im_mant() const { return im_; }
  const Integer& rad_mant() const { return rad_; }

  Rational re() const;
  Rational im() const;
  Rational radius() const;
  double re_double() const;
  double im_double() const;
  double rad_double() const;

  Ball with_precision(long prec) const;
  Ball add_error(const Integer& ulps) const { return Ball(prec_, re_, im_, rad_ + ulps); }

  bool is_exact() const { return rad_ == 0; }
  bool surely_nonzero() const;      // zero is not in the disc
  bool may_be_zero() const { return !surely_nonzero(); }
  // +1 / -1 when the real part has a certain sign, 0 otherwise.
  int real_sign() const;
  int imag_sign() const;
  bool overlaps(const Ball& o) const;
  // this disc lies inside the square [o.re +- o.rad] x [o.im +- o.rad]
  bool inside_square_of(const Ball& o) const;

  Ball conj() const { return Ball(prec_, re_, -im_, rad_); }
  Ball real_part() const { return Ball(prec_, re_, 0, rad_); }
  Ball imag_part() const { return Ball(prec_, im_, 0, rad_); }
  Ball abs2() const;       // |z|^2 as a real disc
  Ball sqrt_real() const;  // principal square root of a real, non-negative disc
  Ball abs() const { return abs2().sqrt_real(); }
  // Upper bound of |z| (in units 2^-prec) and lower bound (may be 0).
  Integer abs_upper_mant() const;
  Integer abs_lower_mant() const;
  Rational abs_upper() const;
  Rational abs_lower() const;
  // Upper bound on the real value as a rational (center + radius) and lower bound.
  Rational real_upper() const;
  Rational real_lower() const;

  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);
  Ball operator-() const { return Ball(prec_, -re_, -im_, rad_); }
  Ball& operator+=(const Ball& b) { return *this = *this + b; }
  Ball& operator-=(const Ball& b) { return *this = *this - b; }
  Ball& operator*=(const Ball& b) { return *this = *this * b; }
  Ball mul_integer(const Integer& k) const { return Ball(prec_, re_ * k, im_ * k, rad_ * iabs(k)); }
  Ball pow(unsigned long e) const;
  Ball inverse() const;
  Ball times_i() const { return Ball(prec_, -im_, re_, rad_); }

  std::string to_string() const;

 private:
  long prec_ = 64;
  Integer re_, im_, rad_;
};

}  // namespace llterm
