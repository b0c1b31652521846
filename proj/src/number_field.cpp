#include <llterm/number_field.hpp>

#include <llterm/factor.hpp>

#include <stdexcept>

namespace llterm {

NumberField::NumberField(const IntPolynomial& irreducible)
    : q_(primitive_part(irreducible)), qm_(make_monic(to_rational(q_))) {
  if (q_.degree() < 1) throw std::invalid_argument("NumberField: constant defining polynomial");
  for (const auto& d : isolate_squarefree(q_)) roots_.push_back(AlgebraicNumber::from_root(q_, d));
  RatPolynomial xi = RatPolynomial::constant(Rational(1));
  for (int i = 0; i < degree(); ++i) {
    power_traces_.push_back(llterm::trace(multiplication_matrix(xi)));
    xi = xi * RatPolynomial::x();
  }
}

RatPolynomial NumberField::reduce(const RatPolynomial& v) const {
  if (v.degree() < degree()) return v;
  return rem(v, qm_);
}

RationalMatrix NumberField::multiplication_matrix(const RatPolynomial& v) const {
  const int e = degree();
  RationalMatrix m(e, e);
  RatPolynomial cur = reduce(v);
  for (int j = 0; j < e; ++j) {
    for (int i = 0; i < e; ++i) m(i, j) = cur.coeff(i);
    cur = reduce(cur * RatPolynomial::x());
  }
  return m;
}

FieldElement::FieldElement(FieldPtr f, const RatPolynomial& v) : f_(std::move(f)), v_(f_ ? f_->reduce(v) : v) {
  if (!f_ && v_.degree() > 0) throw std::logic_error("FieldElement: non-constant value without a field");
}

FieldElement FieldElement::generator(const FieldPtr& f) { return FieldElement(f, RatPolynomial::x()); }

std::vector<Rational> FieldElement::coordinates() const {
  const int e = f_ ? f_->degree() : 1;
  std::vector<Rational> c(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) c[i] = v_.coeff(i);
  return c;
}

namespace {
const FieldPtr& pick(const FieldPtr& a, const FieldPtr& b) {
  if (a && b && a != b && a->defining_poly() != b->defining_poly())
    throw std::logic_error("FieldElement: mixing elements of different fields");
  return a ? a : b;
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return FieldElement(pick(a.f_, b.f_), a.v_ + b.v_, true);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return FieldElement(pick(a.f_, b.f_), a.v_ - b.v_, true);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = pick(a.f_, b.f_);
  if (a.is_rational()) return FieldElement(f, a.rational_value() * b.v_, true);
  if (b.is_rational()) return FieldElement(f, b.rational_value() * a.v_, true);
  return FieldElement(f, f->reduce(a.v_ * b.v_), true);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
  if (is_rational()) return FieldElement(f_, Rational(1 / rational_value()));
  auto r = xgcd(v_, f_->monic_poly());
  if (r.g.degree() != 0) throw std::logic_error("FieldElement: defining polynomial not irreducible");
  return FieldElement(f_, f_->reduce(r.s), true);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement r(f_, Rational(1)), b = *this;
  while (e) {
    if (e & 1ul) r = r * b;
    e >>= 1ul;
    if (e) b = b * b;
  }
  return r;
}

Ball FieldElement::evaluate_at(const Ball& root) const {
  const long prec = root.precision();
  Ball acc(prec, 0, 0, 0);
  for (std::size_t i = v_.size(); i-- > 0;) acc = acc * root + Ball::from_rational(v_[i], prec);
  return acc;
}

Ball FieldElement::evaluate(std::size_t embedding, long bits) const {
  if (is_rational()) return Ball::from_rational(rational_value(), bits + 4);
  const AlgebraicNumber& r = f_->embeddings().at(embedding);
  // headroom for coefficient growth in Horner's scheme
  long extra = 16;
  for (const auto& c : v_.coefficients()) extra = std::max(extra, 16 + bit_length(c.get_num()));
  extra += v_.degree() * (2 + bit_length(r.height()));
  for (;;) {
    Ball b = evaluate_at(r.enclose(bits + extra));
    if (bit_length(b.rad_mant()) <= b.precision() - bits) return b.with_precision(bits + 4);
    extra *= 2;
  }
}

AlgebraicNumber FieldElement::to_algebraic(std::size_t embedding) const {
  if (is_rational()) return AlgebraicNumber(rational_value());
  IntPolynomial cp = char_poly(f_->multiplication_matrix(v_));
  auto fac = factor(cp);
  std::vector<IntPolynomial> cands{fac.factors.at(0).first};
  return AlgebraicNumber::select(cands, [&](long bits) { return evaluate(embedding, bits); });
}

Rational FieldElement::trace() const {
  if (!f_) return rational_value();
  Rational t = 0;
  const auto& pt = f_->power_traces();
  for (int i = 0; i <= v_.degree(); ++i) t += v_.coeff(i) * pt[i];
  return t;
}

Rational FieldElement::norm() const {
  if (!f_) return rational_value();
  RatPolynomial cp = char_poly_rational(f_->multiplication_matrix(v_));
  Rational n = cp.coeff(0);
  return (f_->degree() % 2) ? Rational(-n) : n;
}

}  // namespace llterm
