#include <llterm/matrix.hpp>

namespace llterm {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatPolynomial char_poly_rational(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly: matrix not square");
  const std::size_t n = m.rows();
  RationalMatrix h = m;
  // similarity reduction to upper Hessenberg form
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t p = k + 1;
    while (p < n && h(p, k) == 0) ++p;
    if (p == n) continue;
    if (p != k + 1) {
      h.swap_rows(p, k + 1);
      h.swap_cols(p, k + 1);
    }
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h(i, k) == 0) continue;
      Rational u = h(i, k) / h(k + 1, k);
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(k + 1, j);
      for (std::size_t j = 0; j < n; ++j) h(j, k + 1) += u * h(j, i);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i=1}^{m-1} h_{m-i,m} prod_{j=m-i+1}^{m} h_{j,j-1} p_{m-i-1}
  std::vector<RatPolynomial> p(n + 1);
  p[0] = RatPolynomial::constant(1);
  const RatPolynomial x = RatPolynomial::x();
  for (std::size_t m1 = 1; m1 <= n; ++m1) {
    RatPolynomial cur = (x - RatPolynomial::constant(h(m1 - 1, m1 - 1))) * p[m1 - 1];
    Rational prod = 1;
    for (std::size_t i = 1; i < m1; ++i) {
      prod *= h(m1 - i, m1 - i - 1);
      if (prod == 0) break;
      Rational coef = h(m1 - i - 1, m1 - 1) * prod;
      if (coef != 0) cur -= coef * p[m1 - i - 1];
    }
    p[m1] = std::move(cur);
  }
  return p[n];
}

IntPolynomial char_poly(const RationalMatrix& m) { return to_primitive_integer(char_poly_rational(m)); }

IntPolynomial char_poly(const IntMatrix& m) {
  RatPolynomial p = char_poly_rational(to_rational(m));
  std::vector<Integer> c;
  for (const auto& v : p.coefficients()) c.push_back(v.get_num());
  return IntPolynomial(std::move(c));
}

RatPolynomial minimal_polynomial(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("minimal_polynomial: matrix not square");
  const std::size_t n = m.rows();
  RatPolynomial acc = RatPolynomial::constant(1);
  for (std::size_t e = 0; e < n; ++e) {
    // skip basis vectors already annihilated by acc
    RationalMatrix am = evaluate(acc, m);
    bool killed = true;
    for (std::size_t i = 0; i < n && killed; ++i)
      if (am(i, e) != 0) killed = false;
    if (killed) continue;
    std::vector<std::vector<Rational>> krylov;
    std::vector<Rational> v(n, Rational(0));
    v[e] = 1;
    for (;;) {
      // Is v in the span of the current Krylov vectors?
      RationalMatrix k(n, krylov.size());
      for (std::size_t j = 0; j < krylov.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) k(i, j) = krylov[j][i];
      auto sol = solve_linear_exact(k, v);
      if (sol.consistent && !krylov.empty()) {
        std::vector<Rational> c(krylov.size() + 1);
        for (std::size_t j = 0; j < krylov.size(); ++j) c[j] = -sol.particular[j];
        c[krylov.size()] = 1;
        RatPolynomial local(std::move(c));
        acc = make_monic(divmod(acc * local, gcd(acc, local)).first);
        break;
      }
      krylov.push_back(v);
      v = m.apply(v);
    }
  }
  return acc;
}

RationalMatrix evaluate(const RatPolynomial& p, const RationalMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix acc(n, n);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < n; ++d) acc(d, d) += p[i];
  }
  return acc;
}

Rational trace(const RationalMatrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

RationalMatrix companion(const IntPolynomial& p) {
  const int n = p.degree();
  RationalMatrix c(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = make_rational(-p[i], p.leading());
  return c;
}

}  // namespace llterm
