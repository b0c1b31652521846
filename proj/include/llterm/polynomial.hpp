#pragma once

#include <llterm/numeric.hpp>

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace llterm {

// Dense univariate polynomial, coefficients stored lowest degree first.
// Trailing zeros are always trimmed so that degree() is exact.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = v;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class U>
  U evaluate(const U& x, const U& zero) const {
    U acc = zero;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }
  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<T> r(c_);
    for (auto& v : r) v = -v;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (llterm::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> r(a.c_);
    for (auto& v : r) v *= s;
    return Polynomial(std::move(r));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(T(1)), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  // p(q(x))
  Polynomial compose(const Polynomial& q) const {
    Polynomial acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && llterm::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

// ---- rational polynomial algebra -------------------------------------------

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial rem(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial make_monic(const RatPolynomial& p);
// Monic gcd (zero if both are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
// Returns (g, s, t) with s a + t b = g, g monic.
struct RatXgcd {
  RatPolynomial g, s, t;
};
RatXgcd xgcd(const RatPolynomial& a, const RatPolynomial& b);

// ---- integer polynomial helpers --------------------------------------------

Integer content(const IntPolynomial& p);
// Primitive part with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);
RatPolynomial to_rational(const IntPolynomial& p);
// Clears denominators and content; leading coefficient positive.
IntPolynomial to_primitive_integer(const RatPolynomial& p);
Integer height(const IntPolynomial& p);
// Exact quotient a / b over Z if b divides a, otherwise nullopt.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
// p(-x), x^n p(1/x), p(x + r) style substitutions used by algebraic arithmetic.
IntPolynomial negate_variable(const IntPolynomial& p);
IntPolynomial reverse(const IntPolynomial& p);
// Primitive polynomial whose roots are {r + s : p(r) = 0}.
IntPolynomial translate(const IntPolynomial& p, const Rational& s);
// Primitive polynomial whose roots are {r * s : p(r) = 0}, s != 0.
IntPolynomial scale_roots(const IntPolynomial& p, const Rational& s);
// Primitive polynomial whose roots are {r^2 : p(r)=0} is not needed; this one gives p(x^2).
IntPolynomial substitute_square(const IntPolynomial& p);
// x^r mod p for monic p, computed over Z.
IntPolynomial power_of_x_mod(unsigned long r, const IntPolynomial& monic);
IntPolynomial cyclotomic(unsigned r);

// Yun's algorithm: p = c * prod f_i^i with f_i squarefree, pairwise coprime,
// primitive. Returned as (f_i, i) for nonconstant f_i.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);
IntPolynomial squarefree_part(const IntPolynomial& p);

std::string to_string(const IntPolynomial& p, const std::string& var = "x");
std::string to_string(const RatPolynomial& p, const std::string& var = "x");

}  // namespace llterm
