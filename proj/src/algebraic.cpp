#include <llterm/algebraic.hpp>

#include <llterm/factor.hpp>
#include <llterm/matrix.hpp>

#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace llterm {

struct AlgebraicNumber::Impl {
  IntPolynomial poly;
  Integer height;
  bool rational = false;
  Rational value;
  bool real = false;
  mutable std::mutex mu;
  mutable RootDisc disc;
};

namespace {

std::shared_ptr<AlgebraicNumber::Impl> make_rational_impl(const Rational& v) {
  auto impl = std::make_shared<AlgebraicNumber::Impl>();
  impl->rational = true;
  impl->value = v;
  impl->real = true;
  impl->poly = IntPolynomial{Integer(-v.get_num()), Integer(v.get_den())};
  impl->height = height(impl->poly);
  impl->disc = {Ball::from_rational(v, 64), true};
  return impl;
}

constexpr long kMaxSelectBits = 1L << 16;

}  // namespace

bool same_object(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.impl_ == b.impl_; }

AlgebraicNumber::AlgebraicNumber() : impl_(make_rational_impl(Rational(0))) {}
AlgebraicNumber::AlgebraicNumber(long v) : impl_(make_rational_impl(Rational(v))) {}
AlgebraicNumber::AlgebraicNumber(const Integer& v) : impl_(make_rational_impl(Rational(v))) {}
AlgebraicNumber::AlgebraicNumber(const Rational& v) : impl_(make_rational_impl(v)) {}

AlgebraicNumber AlgebraicNumber::from_root(const IntPolynomial& irreducible, const RootDisc& disc) {
  IntPolynomial p = primitive_part(irreducible);
  if (p.degree() == 1) return AlgebraicNumber(make_rational(-p[0], p[1]));
  auto impl = std::make_shared<Impl>();
  impl->poly = p;
  impl->height = llterm::height(p);
  impl->real = disc.real;
  impl->disc = disc;
  return AlgebraicNumber(impl);
}

const IntPolynomial& AlgebraicNumber::min_poly() const { return impl_->poly; }
int AlgebraicNumber::degree() const { return impl_->poly.degree(); }
const Integer& AlgebraicNumber::height() const { return impl_->height; }
bool AlgebraicNumber::is_rational() const { return impl_->rational; }
const Rational& AlgebraicNumber::rational_value() const {
  if (!impl_->rational) throw std::logic_error("rational_value of irrational number");
  return impl_->value;
}
bool AlgebraicNumber::is_real() const { return impl_->real; }
bool AlgebraicNumber::is_zero() const { return impl_->rational && impl_->value == 0; }

Ball AlgebraicNumber::enclose(long bits) const {
  const long prec = bits + 4;
  if (impl_->rational) return Ball::from_rational(impl_->value, prec);
  std::lock_guard<std::mutex> lock(impl_->mu);
  refine_root(impl_->poly, impl_->disc, bits + 1);
  Ball b = impl_->disc.disc.with_precision(prec);
  if (impl_->real) b = Ball(prec, b.re_mant(), 0, b.rad_mant());
  return b;
}

RootDisc AlgebraicNumber::isolation() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->disc;
}

std::complex<double> AlgebraicNumber::approx() const {
  Ball b = enclose(60);
  return {b.re_double(), b.im_double()};
}

std::string AlgebraicNumber::to_string() const {
  if (impl_->rational) return impl_->value.get_str();
  std::ostringstream os;
  os.precision(12);
  auto z = approx();
  os << "root of " << llterm::to_string(impl_->poly) << " near " << z.real();
  if (!impl_->real) os << (z.imag() < 0 ? " - " : " + ") << std::fabs(z.imag()) << "i";
  return os.str();
}

AlgebraicNumber AlgebraicNumber::select(const std::vector<IntPolynomial>& candidates,
                                        const std::function<Ball(long)>& approx) {
  struct Cand {
    IntPolynomial poly;
    RootDisc disc;
  };
  std::vector<Cand> live;
  for (const auto& c : candidates) {
    if (c.degree() < 1) continue;
    for (auto& d : isolate_squarefree(c)) live.push_back({c, d});
  }
  for (long bits = 32; bits <= kMaxSelectBits; bits *= 2) {
    Ball target = approx(bits);
    std::vector<Cand> next;
    for (auto& c : live) {
      if (c.disc.real && target.imag_sign() != 0) continue;
      refine_root(c.poly, c.disc, bits);
      if (c.disc.disc.overlaps(target)) next.push_back(c);
    }
    live = std::move(next);
    if (live.size() == 1) return from_root(live[0].poly, live[0].disc);
    if (live.empty()) throw std::logic_error("AlgebraicNumber::select: no candidate root matches");
  }
  throw std::runtime_error("AlgebraicNumber::select: candidates not separated");
}

AlgebraicNumber AlgebraicNumber::select_root_of(const IntPolynomial& p, const std::function<Ball(long)>& approx) {
  std::vector<IntPolynomial> cands;
  for (auto& [f, m] : factor(p).factors) cands.push_back(f);
  return select(cands, approx);
}

AlgebraicNumber AlgebraicNumber::root_of_unity(long num, long den) {
  if (den <= 0) throw std::domain_error("root_of_unity: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  long g = std::gcd(num, den);
  long r = den / g;
  num /= g;
  if (r == 1) return AlgebraicNumber(1);
  if (r == 2) return AlgebraicNumber(-1);
  long double ang = 2 * M_PIl * static_cast<long double>(num) / static_cast<long double>(r);
  long double c = std::cos(ang), s = std::sin(ang);
  auto approx = [c, s](long bits) {
    long prec = std::max<long>(bits, 64);
    auto conv = [prec](long double x) {
      int e;
      long double m = std::frexp(x, &e);
      long long mm = static_cast<long long>(std::ldexp(m, 62));
      return shift(Integer(static_cast<long>(mm)), e - 62 + prec);
    };
    // long double trig is accurate to ~1e-18; 2^-50 is a safe radius
    return Ball(prec, conv(c), conv(s), shift(Integer(1), prec - 50));
  };
  return select({cyclotomic(static_cast<unsigned>(r))}, approx);
}

AlgebraicNumber AlgebraicNumber::imaginary_unit() { return root_of_unity(1, 4); }

std::vector<RootWithMultiplicity> isolate_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
  std::vector<RootWithMultiplicity> out;
  for (const auto& [f, m] : factor(p).factors)
    for (const auto& d : isolate_squarefree(f)) out.push_back({AlgebraicNumber::from_root(f, d), m});
  return out;
}

namespace {

std::vector<IntPolynomial> distinct_factors(const IntPolynomial& p) {
  std::vector<IntPolynomial> out;
  for (auto& [f, m] : factor(p).factors) out.push_back(f);
  return out;
}

template <class Op>
AlgebraicNumber combine(const AlgebraicNumber& a, const AlgebraicNumber& b, const RationalMatrix& m, Op op) {
  auto approx = [&](long bits) {
    // a little headroom for the operation's error growth
    long extra = 8 + bit_length(a.height()) + bit_length(b.height());
    Ball x = a.enclose(bits + extra), y = b.enclose(bits + extra);
    return op(x, y);
  };
  return AlgebraicNumber::select(distinct_factors(char_poly(m)), approx);
}

RationalMatrix identity_rat(std::size_t n) { return RationalMatrix::identity(n); }

}  // namespace

AlgebraicNumber alg_neg(const AlgebraicNumber& a) {
  if (a.is_rational()) return AlgebraicNumber(Rational(-a.rational_value()));
  RootDisc d = a.isolation();
  d.disc = -d.disc;
  return AlgebraicNumber::from_root(negate_variable(a.min_poly()), d);
}

AlgebraicNumber alg_conj(const AlgebraicNumber& a) {
  if (a.is_real()) return a;
  RootDisc d = a.isolation();
  d.disc = d.disc.conj();
  return AlgebraicNumber::from_root(a.min_poly(), d);
}

AlgebraicNumber alg_inv(const AlgebraicNumber& a) {
  if (a.is_zero()) throw std::domain_error("alg_inv: inverse of zero");
  if (a.is_rational()) return AlgebraicNumber(Rational(1 / a.rational_value()));
  return AlgebraicNumber::select({reverse(a.min_poly())}, [&](long bits) {
    long extra = 8 + 2 * bit_length(a.height()) + a.degree();
    return a.enclose(bits + extra).inverse();
  });
}

AlgebraicNumber alg_add(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicNumber(Rational(a.rational_value() + b.rational_value()));
  if (b.is_rational() || a.is_rational()) {
    const AlgebraicNumber& x = a.is_rational() ? b : a;
    const Rational r = a.is_rational() ? a.rational_value() : b.rational_value();
    if (r == 0) return x;
    return AlgebraicNumber::select({translate(x.min_poly(), r)}, [&](long bits) {
      Ball e = x.enclose(bits + 4);
      return e + Ball::from_rational(r, e.precision());
    });
  }
  RationalMatrix ca = companion(a.min_poly()), cb = companion(b.min_poly());
  RationalMatrix m = kronecker(ca, identity_rat(cb.rows())) + kronecker(identity_rat(ca.rows()), cb);
  return combine(a, b, m, [](const Ball& x, const Ball& y) { return x + y; });
}

AlgebraicNumber alg_sub(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_add(a, alg_neg(b)); }

AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicNumber(Rational(a.rational_value() * b.rational_value()));
  if (a.is_zero() || b.is_zero()) return AlgebraicNumber(0);
  if (a.is_rational() || b.is_rational()) {
    const AlgebraicNumber& x = a.is_rational() ? b : a;
    const Rational r = a.is_rational() ? a.rational_value() : b.rational_value();
    if (r == 1) return x;
    if (r == -1) return alg_neg(x);
    return AlgebraicNumber::select({scale_roots(x.min_poly(), r)}, [&](long bits) {
      long extra = 4 + bit_length(abs(r.get_num())) + bit_length(r.get_den());
      Ball e = x.enclose(bits + extra);
      return e * Ball::from_rational(r, e.precision());
    });
  }
  RationalMatrix m = kronecker(companion(a.min_poly()), companion(b.min_poly()));
  return combine(a, b, m, [](const Ball& x, const Ball& y) { return x * y; });
}

AlgebraicNumber alg_div(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_mul(a, alg_inv(b)); }

AlgebraicNumber alg_pow(const AlgebraicNumber& a, unsigned long e) {
  AlgebraicNumber r(1), base = a;
  while (e) {
    if (e & 1ul) r = alg_mul(r, base);
    e >>= 1ul;
    if (e) base = alg_mul(base, base);
  }
  return r;
}

AlgebraicNumber alg_abs2(const AlgebraicNumber& a) {
  if (a.is_real()) return alg_mul(a, a);
  return alg_mul(a, alg_conj(a));
}

AlgebraicNumber alg_re(const AlgebraicNumber& a) {
  if (a.is_real()) return a;
  return alg_mul(alg_add(a, alg_conj(a)), AlgebraicNumber(Rational(1, 2)));
}

AlgebraicNumber alg_im(const AlgebraicNumber& a) {
  if (a.is_real()) return AlgebraicNumber(0);
  AlgebraicNumber diff = alg_sub(a, alg_conj(a));  // 2 i Im(a)
  return alg_mul(diff, alg_mul(AlgebraicNumber::imaginary_unit(), AlgebraicNumber(Rational(-1, 2))));
}

AlgebraicNumber alg_sqrt(const AlgebraicNumber& a) {
  if (!a.is_real()) throw std::domain_error("alg_sqrt: argument not real");
  int s = alg_sign(a);
  if (s < 0) throw std::domain_error("alg_sqrt: negative argument");
  if (s == 0) return AlgebraicNumber(0);
  if (a.is_rational()) {
    const Rational& q = a.rational_value();
    Integer n = isqrt_floor(q.get_num()), d = isqrt_floor(q.get_den());
    if (n * n == q.get_num() && d * d == q.get_den()) return AlgebraicNumber(make_rational(n, d));
  }
  return AlgebraicNumber::select_root_of(substitute_square(a.min_poly()), [&](long bits) {
    long extra = 8 + bit_length(a.height()) + a.degree();
    Ball e = a.enclose(2 * bits + extra);
    Ball s2 = Ball(e.precision(), e.re_mant(), 0, e.rad_mant()).sqrt_real();
    return s2;
  });
}

AlgebraicNumber alg_abs(const AlgebraicNumber& a) { return alg_sqrt(alg_abs2(a)); }

Rational mignotte_bound(const IntPolynomial& p) {
  const long d = p.degree();
  if (d < 2) return Rational(1);
  Integer h = height(p);
  Integer dd = isqrt_ceil(ipow(Integer(d), static_cast<unsigned long>(d + 1)));
  Integer den = dd * ipow(h, static_cast<unsigned long>(d - 1));
  // sqrt(6) >= 2449/1000
  return make_rational(Integer(2449), Integer(1000) * den);
}

bool alg_equals(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (same_object(a, b)) return true;
  if (a.is_rational() && b.is_rational()) return a.rational_value() == b.rational_value();
  if (a.min_poly() != b.min_poly()) return false;
  if (a.is_real() != b.is_real()) return false;
  const Rational sep = mignotte_bound(a.min_poly());
  for (long bits = 16;; bits *= 2) {
    Ball x = a.enclose(bits), y = b.enclose(bits);
    if (!x.overlaps(y)) return false;
    // both discs far below the separation: overlapping means same root
    Rational width = x.radius() + y.radius();
    if (2 * width < sep) return true;
    if (bits > kMaxSelectBits * 4) throw std::runtime_error("alg_equals: precision exhausted");
  }
}

int alg_sign(const AlgebraicNumber& a) {
  if (a.is_rational()) return sgn(a.rational_value());
  if (!a.is_real()) throw std::domain_error("alg_sign: non-real argument");
  for (long bits = 32;; bits *= 2) {
    int s = a.enclose(bits).real_sign();
    if (s != 0) return s;
  }
}

int alg_compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.rational_value(), b.rational_value());
  if (alg_equals(a, b)) return 0;
  for (long bits = 32;; bits *= 2) {
    Ball x = a.enclose(bits), y = b.enclose(bits);
    int s = (x - y).real_sign();
    if (s != 0) return s;
  }
}

std::optional<unsigned long> is_root_of_unity(const AlgebraicNumber& a) {
  if (a.is_rational()) {
    if (a.rational_value() == 1) return 1ul;
    if (a.rational_value() == -1) return 2ul;
    return std::nullopt;
  }
  const IntPolynomial& p = a.min_poly();
  if (p.leading() != 1 || abs(p[0]) != 1) return std::nullopt;
  const unsigned long n = static_cast<unsigned long>(p.degree());
  // phi(r) >= sqrt(r/2), so phi(r) = n forces r <= 2 n^2
  for (unsigned long r = 1; r <= 2 * n * n; ++r) {
    unsigned long phi = r, m = r;
    for (unsigned long q = 2; q * q <= m; ++q) {
      if (m % q) continue;
      while (m % q == 0) m /= q;
      phi -= phi / q;
    }
    if (m > 1) phi -= phi / m;
    if (phi != n) continue;
    IntPolynomial red = power_of_x_mod(r, p);
    if (red.degree() == 0 && red[0] == 1) return r;
  }
  return std::nullopt;
}

}  // namespace llterm
