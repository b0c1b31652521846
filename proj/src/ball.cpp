#include <llterm/ball.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace llterm {
namespace {

// round(v * 2^-k) to nearest and report whether rounding happened
Integer round_shift(const Integer& v, long k, bool& inexact) {
  if (k <= 0) return shift(v, -k);
  Integer q, r;
  mpz_fdiv_q_2exp(q.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  if (r != 0) inexact = true;
  if (mpz_tstbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(k - 1))) ++q;
  return q;
}

Integer ceil_shift(const Integer& v, long k) {
  if (k <= 0) return shift(v, -k);
  Integer q;
  mpz_cdiv_q_2exp(q.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return q;
}

Integer round_rational(const Rational& q, long prec, bool& inexact) {
  Integer num = shift(q.get_num(), prec), r, res;
  mpz_fdiv_qr(res.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  if (r != 0) {
    inexact = true;
    if (2 * r >= q.get_den()) ++res;
  }
  return res;
}

Rational dyadic(const Integer& m, long prec) {
  Rational q(m);
  if (prec >= 0)
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(prec));
  else
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-prec));
  return q;
}

void check_prec(const Ball& a, const Ball& b) {
  if (a.precision() != b.precision()) throw std::logic_error("ball precision mismatch");
}

}  // namespace

Ball Ball::from_rational(const Rational& re, const Rational& im, long prec) {
  bool inexact = false;
  Integer r = round_rational(re, prec, inexact);
  Integer i = round_rational(im, prec, inexact);
  return Ball(prec, r, i, inexact ? Integer(1) : Integer(0));
}

Rational Ball::re() const { return dyadic(re_, prec_); }
Rational Ball::im() const { return dyadic(im_, prec_); }
Rational Ball::radius() const { return dyadic(rad_, prec_); }
double Ball::re_double() const { return std::ldexp(mpz_get_d(re_.get_mpz_t()), static_cast<int>(-prec_)); }
double Ball::im_double() const { return std::ldexp(mpz_get_d(im_.get_mpz_t()), static_cast<int>(-prec_)); }
double Ball::rad_double() const { return std::ldexp(mpz_get_d(rad_.get_mpz_t()), static_cast<int>(-prec_)); }

Ball Ball::with_precision(long prec) const {
  if (prec == prec_) return *this;
  if (prec > prec_) {
    long k = prec - prec_;
    return Ball(prec, shift(re_, k), shift(im_, k), shift(rad_, k));
  }
  long k = prec_ - prec;
  bool inexact = false;
  Integer r = round_shift(re_, k, inexact), i = round_shift(im_, k, inexact);
  Integer rad = ceil_shift(rad_, k) + (inexact ? 1 : 0);
  return Ball(prec, r, i, rad);
}

Integer Ball::abs_upper_mant() const { return iabs(re_) + iabs(im_) + rad_; }

Integer Ball::abs_lower_mant() const {
  Integer m = std::max(iabs(re_), iabs(im_));
  return m > rad_ ? Integer(m - rad_) : Integer(0);
}

Rational Ball::abs_upper() const { return dyadic(abs_upper_mant(), prec_); }
Rational Ball::abs_lower() const { return dyadic(abs_lower_mant(), prec_); }
Rational Ball::real_upper() const { return dyadic(re_ + rad_, prec_); }
Rational Ball::real_lower() const { return dyadic(re_ - rad_, prec_); }

bool Ball::surely_nonzero() const { return iabs(re_) > rad_ || iabs(im_) > rad_; }

int Ball::real_sign() const {
  if (re_ > rad_) return 1;
  if (-re_ > rad_) return -1;
  return 0;
}

int Ball::imag_sign() const {
  if (im_ > rad_) return 1;
  if (-im_ > rad_) return -1;
  return 0;
}

bool Ball::overlaps(const Ball& o) const {
  if (o.prec_ != prec_) {
    long p = std::max(prec_, o.prec_);
    return with_precision(p).overlaps(o.with_precision(p));
  }
  Integer r = rad_ + o.rad_;
  return iabs(re_ - o.re_) <= r && iabs(im_ - o.im_) <= r;
}

bool Ball::inside_square_of(const Ball& o) const {
  if (o.prec_ != prec_) {
    long p = std::max(prec_, o.prec_);
    return with_precision(p).inside_square_of(o.with_precision(p));
  }
  return iabs(re_ - o.re_) + rad_ <= o.rad_ && iabs(im_ - o.im_) + rad_ <= o.rad_;
}

Ball operator+(const Ball& a, const Ball& b) {
  check_prec(a, b);
  return Ball(a.prec_, a.re_ + b.re_, a.im_ + b.im_, a.rad_ + b.rad_);
}

Ball operator-(const Ball& a, const Ball& b) {
  check_prec(a, b);
  return Ball(a.prec_, a.re_ - b.re_, a.im_ - b.im_, a.rad_ + b.rad_);
}

Ball operator*(const Ball& a, const Ball& b) {
  check_prec(a, b);
  const long P = a.prec_;
  bool inexact = false;
  Integer re = round_shift(a.re_ * b.re_ - a.im_ * b.im_, P, inexact);
  Integer im = round_shift(a.re_ * b.im_ + a.im_ * b.re_, P, inexact);
  Integer err = iabs(a.re_) + iabs(a.im_);
  err *= b.rad_;
  Integer t = iabs(b.re_) + iabs(b.im_);
  err += t * a.rad_ + a.rad_ * b.rad_;
  Integer rad = ceil_shift(err, P) + (inexact ? 1 : 0);
  return Ball(P, re, im, rad);
}

Ball Ball::inverse() const {
  const long P = prec_;
  Integer lower = std::max(iabs(re_), iabs(im_));
  if (lower <= rad_) throw std::domain_error("ball inverse: disc may contain zero");
  Integer n2 = re_ * re_ + im_ * im_;
  Integer scale = shift(Integer(1), 2 * P);
  Integer r, i;
  // conj(c) / |c|^2 at precision P: mantissa c * 2^(2P) / |c_mant|^2
  Integer num = re_ * scale;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), n2.get_mpz_t());
  num = -im_ * scale;
  mpz_fdiv_q(i.get_mpz_t(), num.get_mpz_t(), n2.get_mpz_t());
  // |1/y - 1/c| <= rad / (|c| (|c| - rad)) with |c| >= lower
  Integer den = lower * (lower - rad_);
  Integer e = rad_ * scale, rad;
  mpz_cdiv_q(rad.get_mpz_t(), e.get_mpz_t(), den.get_mpz_t());
  return Ball(P, r, i, rad + 2);
}

Ball operator/(const Ball& a, const Ball& b) { return a * b.inverse(); }

Ball Ball::abs2() const {
  const long P = prec_;
  bool inexact = false;
  Integer c = round_shift(re_ * re_ + im_ * im_, P, inexact);
  Integer m = iabs(re_) + iabs(im_);
  Integer err = 2 * m * rad_ + rad_ * rad_;
  return Ball(P, c, 0, ceil_shift(err, P) + (inexact ? 1 : 0));
}

Ball Ball::sqrt_real() const {
  const long P = prec_;
  Integer hi = re_ + rad_;
  if (hi < 0) throw std::domain_error("sqrt of negative disc");
  Integer lo = re_ - rad_;
  if (lo <= 0) {
    Integer s = isqrt_ceil(shift(hi, P));
    Integer half = s / 2 + 1;
    return Ball(P, s / 2, 0, half);
  }
  Integer c = isqrt_floor(shift(re_, P));
  Integer l = isqrt_floor(shift(lo, P));
  Integer num = shift(rad_, P), rad;
  mpz_cdiv_q(rad.get_mpz_t(), num.get_mpz_t(), l.get_mpz_t());
  return Ball(P, c, 0, rad + 1);
}

Ball Ball::pow(unsigned long e) const {
  Ball r = Ball::from_integer(1, prec_), b = *this;
  while (e) {
    if (e & 1ul) r = r * b;
    e >>= 1ul;
    if (e) b = b * b;
  }
  return r;
}

std::string Ball::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "[" << re_double() << (im_double() < 0 ? " - " : " + ") << std::fabs(im_double()) << "i +/- "
     << rad_double() << "]";
  return os.str();
}

}  // namespace llterm
