#pragma once

#include <llterm/polynomial.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace llterm {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols) : Matrix(rows, cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }
  static Matrix identity(std::size_t n, const T& one, const T& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix identity(std::size_t n) { return identity(n, T(1), T(0)); }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<T> row(std::size_t i) const { return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v;
    v.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

  Matrix transpose() const {
    Matrix t(c_, r_, r_ * c_ ? a_[0] : T(0));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix product dimension mismatch");
    const T zero = x.zero_like(y);
    Matrix r(x.r_, y.c_, zero);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        const T& v = x(i, k);
        if (is_zero(v)) continue;
        for (std::size_t j = 0; j < y.c_; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a_) v = s * v;
    return r;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != c_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> out;
    out.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) {
      T acc = v.empty() ? T(0) : v[0] - v[0];
      for (std::size_t j = 0; j < c_; ++j) acc += (*this)(i, j) * v[j];
      out.push_back(acc);
    }
    return out;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix pow(unsigned long e, const T& one, const T& zero) const {
    if (!square()) throw std::invalid_argument("power of non-square matrix");
    Matrix res = identity(r_, one, zero), b = *this;
    while (e) {
      if (e & 1ul) res = res * b;
      e >>= 1ul;
      if (e) b = b * b;
    }
    return res;
  }
  Matrix pow(unsigned long e) const { return pow(e, T(1), T(0)); }

  bool is_zero_matrix() const {
    for (const auto& v : a_)
      if (!is_zero(v)) return false;
    return true;
  }

 private:
  static void check_same(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix dimension mismatch");
  }
  T zero_like(const Matrix& y) const {
    if (!a_.empty()) return a_[0] - a_[0];
    if (!y.a_.empty()) return y.a_[0] - y.a_[0];
    return T(0);
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

template <class T>
struct LinearSolution {
  bool consistent = false;
  std::vector<T> particular;
  std::vector<std::vector<T>> kernel;
};

// Reduced row echelon form in place over a field; returns pivot columns.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref_in_place(m).size();
}

// Solve M x = rhs exactly. zero/one are the field constants for T.
template <class T>
LinearSolution<T> solve_linear_exact(const Matrix<T>& m, const std::vector<T>& rhs, const T& zero, const T& one) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("rhs dimension mismatch");
  const std::size_t n = m.cols();
  Matrix<T> aug(m.rows(), n + 1, zero);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  auto piv = rref_in_place(aug);
  LinearSolution<T> sol;
  if (!piv.empty() && piv.back() == n) return sol;
  sol.consistent = true;
  sol.particular.assign(n, zero);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t k = 0; k < piv.size(); ++k) {
    is_pivot[piv[k]] = true;
    sol.particular[piv[k]] = aug(k, n);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(n, zero);
    v[f] = one;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -aug(k, f);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

template <class T>
LinearSolution<T> solve_linear_exact(const Matrix<T>& m, const std::vector<T>& rhs) {
  return solve_linear_exact(m, rhs, T(0), T(1));
}

RationalMatrix to_rational(const IntMatrix& m);
// Monic characteristic polynomial over Q.
RatPolynomial char_poly_rational(const RationalMatrix& m);
// Characteristic polynomial with denominators cleared (monic for integer input).
IntPolynomial char_poly(const RationalMatrix& m);
IntPolynomial char_poly(const IntMatrix& m);
// Monic minimal polynomial over Q.
RatPolynomial minimal_polynomial(const RationalMatrix& m);
// p(M) for a rational polynomial.
RationalMatrix evaluate(const RatPolynomial& p, const RationalMatrix& m);
Rational trace(const RationalMatrix& m);
// Kronecker product.
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);
// Companion matrix of the monic normalization of p.
RationalMatrix companion(const IntPolynomial& p);

}  // namespace llterm
