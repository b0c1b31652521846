#include <llterm/lattice.hpp>

#include <stdexcept>

namespace llterm {
namespace {

struct Xgcd {
  Integer g, s, t;
};
Xgcd ext_gcd(const Integer& a, const Integer& b) {
  Xgcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}
void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& input) {
  IntMatrix h = input;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (std::size_t i = row + 1; i < m; ++i) {
      if (h(i, col) == 0) continue;
      if (h(row, col) == 0) {
        h.swap_rows(row, i);
        continue;
      }
      Integer a = h(row, col), b = h(i, col);
      Xgcd x = ext_gcd(a, b);
      Integer ag = a / x.g, bg = b / x.g;
      for (std::size_t j = 0; j < n; ++j) {
        Integer top = x.s * h(row, j) + x.t * h(i, j);
        Integer bot = ag * h(i, j) - bg * h(row, j);
        h(row, j) = top;
        h(i, j) = bot;
      }
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) negate_row(h, row);
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
      add_row_multiple(h, i, row, -q);
    }
    ++row;
  }
  IntMatrix out(row, n);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& mat) {
  const std::size_t m = mat.rows(), n = mat.cols();
  SmithForm s{IntMatrix::identity(m), mat, IntMatrix::identity(n), 0, {}};
  IntMatrix& D = s.D;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        s.rank = t;
        goto done;
      }
      if (pi != t) {
        D.swap_rows(pi, t);
        s.U.swap_rows(pi, t);
      }
      if (pj != t) {
        D.swap_cols(pj, t);
        s.V.swap_cols(pj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        add_row_multiple(D, i, t, -q);
        add_row_multiple(s.U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        add_col_multiple(D, j, t, -q);
        add_col_multiple(s.V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            add_row_multiple(D, t, i, 1);
            add_row_multiple(s.U, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(s.U, t);
    }
    s.rank = t + 1;
  }
done:
  for (std::size_t t = 0; t < s.rank; ++t) s.divisors.push_back(D(t, t));
  return s;
}

IntVector IntegerCoset::point(const IntVector& z) const {
  IntVector x = x0;
  for (std::size_t j = 0; j < basis.cols(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += basis(i, j) * z[j];
  return x;
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm_of(l, q.get_den());
  IntVector out;
  for (const auto& q : v) out.push_back(q.get_num() * (l / q.get_den()));
  return out;
}

std::optional<IntegerCoset> integer_solutions(const RationalMatrix& a, const RatVector& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw std::invalid_argument("integer_solutions: rhs dimension mismatch");
  IntMatrix ai(m, n);
  IntVector bi(m);
  for (std::size_t i = 0; i < m; ++i) {
    RatVector row = a.row(i);
    row.push_back(b[i]);
    IntVector r = clear_denominators(row);
    for (std::size_t j = 0; j < n; ++j) ai(i, j) = r[j];
    bi[i] = r[n];
  }
  SmithForm s = smith_normal_form(ai);
  IntVector c = s.U.apply(bi);
  IntVector y(n, Integer(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), s.divisors[i].get_mpz_t())) return std::nullopt;
      y[i] = c[i] / s.divisors[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerCoset out;
  out.x0 = s.V.apply(y);
  out.basis = IntMatrix(n, n - s.rank);
  for (std::size_t j = s.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out.basis(i, j - s.rank) = s.V(i, j);
  return out;
}

bool in_row_lattice(const IntMatrix& hnf, const IntVector& v) {
  IntVector r = v;
  std::size_t col = 0;
  for (std::size_t i = 0; i < hnf.rows(); ++i) {
    while (col < hnf.cols() && hnf(i, col) == 0) {
      if (r[col] != 0) return false;
      ++col;
    }
    if (col == hnf.cols()) break;
    if (!mpz_divisible_p(r[col].get_mpz_t(), hnf(i, col).get_mpz_t())) return false;
    Integer q = r[col] / hnf(i, col);
    for (std::size_t j = col; j < hnf.cols(); ++j) r[j] -= q * hnf(i, j);
    ++col;
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace llterm
