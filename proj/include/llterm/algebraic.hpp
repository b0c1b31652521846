#pragma once

#include <llterm/ball.hpp>
#include <llterm/polynomial.hpp>
#include <llterm/roots.hpp>

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace llterm {

// Exact complex algebraic number: primitive irreducible minimal polynomial
// plus a certified isolating disc. Values are immutable; the disc is refined
// in place under a lock and only ever shrinks.
class AlgebraicNumber {
 public:
  AlgebraicNumber();
  AlgebraicNumber(long v);  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(const Integer& v);  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(const Rational& v);  // NOLINT(google-explicit-constructor)

  // The root of an irreducible polynomial isolated by `disc`.
  static AlgebraicNumber from_root(const IntPolynomial& irreducible, const RootDisc& disc);
  // The unique root among the irreducible `candidates` that lies in every
  // enclosure approx(bits). Throws if approx cannot separate the candidates.
  static AlgebraicNumber select(const std::vector<IntPolynomial>& candidates,
                                const std::function<Ball(long bits)>& approx);
  // Selects among the roots of an arbitrary nonzero polynomial.
  static AlgebraicNumber select_root_of(const IntPolynomial& p, const std::function<Ball(long bits)>& approx);
  // exp(2 pi i num / den)
  static AlgebraicNumber root_of_unity(long num, long den);
  static AlgebraicNumber imaginary_unit();

  const IntPolynomial& min_poly() const;
  int degree() const;
  const Integer& height() const;
  bool is_rational() const;
  const Rational& rational_value() const;  // only when is_rational()
  bool is_real() const;
  bool is_zero() const;

  // Enclosure with radius at most 2^-bits, at precision bits + 4.
  Ball enclose(long bits) const;
  RootDisc isolation() const;
  std::complex<double> approx() const;
  std::string to_string() const;

  struct Impl;

 private:
  explicit AlgebraicNumber(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
  friend bool same_object(const AlgebraicNumber&, const AlgebraicNumber&);
};

struct RootWithMultiplicity {
  AlgebraicNumber root;
  int multiplicity;
};

// All distinct complex roots with multiplicities; min polys from exact factorization.
std::vector<RootWithMultiplicity> isolate_roots(const IntPolynomial& p);

AlgebraicNumber alg_add(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_sub(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_div(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_neg(const AlgebraicNumber& a);
AlgebraicNumber alg_inv(const AlgebraicNumber& a);
AlgebraicNumber alg_conj(const AlgebraicNumber& a);
AlgebraicNumber alg_pow(const AlgebraicNumber& a, unsigned long e);
AlgebraicNumber alg_re(const AlgebraicNumber& a);
AlgebraicNumber alg_im(const AlgebraicNumber& a);
AlgebraicNumber alg_abs2(const AlgebraicNumber& a);
// Non-negative square root of a non-negative real algebraic number.
AlgebraicNumber alg_sqrt(const AlgebraicNumber& a);
AlgebraicNumber alg_abs(const AlgebraicNumber& a);

bool alg_equals(const AlgebraicNumber& a, const AlgebraicNumber& b);
// Sign of a real algebraic number.
int alg_sign(const AlgebraicNumber& a);
// Three-way comparison of real algebraic numbers.
int alg_compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
std::optional<unsigned long> is_root_of_unity(const AlgebraicNumber& a);

// Lower bound sqrt(6) / (d^((d+1)/2) H^(d-1)) on the distance between
// distinct roots, as an exact rational not exceeding the true value.
Rational mignotte_bound(const IntPolynomial& p);

inline AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_add(a, b); }
inline AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_sub(a, b); }
inline AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_mul(a, b); }
inline AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_div(a, b); }
inline AlgebraicNumber operator-(const AlgebraicNumber& a) { return alg_neg(a); }
inline AlgebraicNumber& operator+=(AlgebraicNumber& a, const AlgebraicNumber& b) { return a = alg_add(a, b); }
inline AlgebraicNumber& operator-=(AlgebraicNumber& a, const AlgebraicNumber& b) { return a = alg_sub(a, b); }
inline AlgebraicNumber& operator*=(AlgebraicNumber& a, const AlgebraicNumber& b) { return a = alg_mul(a, b); }
inline bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_equals(a, b); }
inline bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !alg_equals(a, b); }
inline bool is_zero(const AlgebraicNumber& a) { return a.is_zero(); }

}  // namespace llterm
