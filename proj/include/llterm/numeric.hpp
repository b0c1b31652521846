#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace llterm {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rpow(const Rational& base, unsigned long e) {
  Integer n = ipow(base.get_num(), e), d = ipow(base.get_den(), e);
  return make_rational(n, d);
}

// Exact shift: value * 2^k for k possibly negative (floor for negative k).
inline Integer shift(const Integer& v, long k) {
  Integer r;
  if (k >= 0)
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  else
    mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  return r;
}

inline long bit_length(const Integer& v) {
  if (v == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

inline Integer isqrt_floor(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

inline Integer isqrt_ceil(const Integer& v) {
  Integer r = isqrt_floor(v);
  if (r * r < v) ++r;
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline Integer iabs(const Integer& v) { return abs(v); }
inline Rational rabs(const Rational& v) { return abs(v); }

inline bool is_zero(const Integer& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

}  // namespace llterm
