#pragma once

#include <llterm/algebraic.hpp>
#include <llterm/matrix.hpp>

#include <memory>
#include <vector>

namespace llterm {

// K = Q[x]/(q) for an irreducible integer polynomial q, together with its
// complex embeddings (the roots of q).
class NumberField {
 public:
  explicit NumberField(const IntPolynomial& irreducible);

  const IntPolynomial& defining_poly() const { return q_; }
  const RatPolynomial& monic_poly() const { return qm_; }
  int degree() const { return q_.degree(); }
  const std::vector<AlgebraicNumber>& embeddings() const { return roots_; }
  std::size_t embedding_count() const { return roots_.size(); }

  RatPolynomial reduce(const RatPolynomial& v) const;
  // Matrix of multiplication by v in the power basis (columns = v x^j).
  RationalMatrix multiplication_matrix(const RatPolynomial& v) const;
  // Tr(x^i) for i < degree.
  const std::vector<Rational>& power_traces() const { return power_traces_; }

 private:
  IntPolynomial q_;
  RatPolynomial qm_;
  std::vector<AlgebraicNumber> roots_;
  std::vector<Rational> power_traces_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field. A null field pointer marks a rational constant
// that combines with elements of any field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long v) : v_(RatPolynomial::constant(Rational(v))) {}  // NOLINT
  FieldElement(const Rational& v) : v_(RatPolynomial::constant(v)) {}  // NOLINT
  FieldElement(FieldPtr f, const RatPolynomial& v);
  FieldElement(FieldPtr f, const Rational& v) : f_(std::move(f)), v_(RatPolynomial::constant(v)) {}
  static FieldElement generator(const FieldPtr& f);

  const FieldPtr& field() const { return f_; }
  const RatPolynomial& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  bool is_rational() const { return v_.degree() <= 0; }
  Rational rational_value() const { return v_.coeff(0); }
  // Power-basis coordinates, padded to the field degree.
  std::vector<Rational> coordinates() const;

  FieldElement operator-() const { return FieldElement(f_, -v_, true); }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.v_ == b.v_; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  FieldElement inverse() const;
  FieldElement pow(unsigned long e) const;
  FieldElement scaled(const Rational& s) const { return FieldElement(f_, s * v_, true); }

  // Value under the embedding x -> root.
  Ball evaluate_at(const Ball& root) const;
  Ball evaluate(std::size_t embedding, long bits) const;
  AlgebraicNumber to_algebraic(std::size_t embedding) const;
  Rational trace() const;
  Rational norm() const;

 private:
  FieldElement(FieldPtr f, RatPolynomial v, bool /*reduced*/) : f_(std::move(f)), v_(std::move(v)) {}
  FieldPtr f_;
  RatPolynomial v_;
};

inline bool is_zero(const FieldElement& e) { return e.is_zero(); }

}  // namespace llterm
