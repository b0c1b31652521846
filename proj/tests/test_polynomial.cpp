// Polynomial arithmetic, factorization and characteristic polynomials.
// Factorizations were frozen from an independent CAS (sympy factor_list).
#include <gtest/gtest.h>

#include <llterm/factor.hpp>
#include <llterm/matrix.hpp>

#include <random>

using namespace llterm;

namespace {

IntPolynomial P(std::vector<long> high_to_low) {
  std::vector<Integer> c;
  for (auto it = high_to_low.rbegin(); it != high_to_low.rend(); ++it) c.emplace_back(*it);
  return IntPolynomial(std::move(c));
}

std::vector<std::pair<IntPolynomial, int>> sorted(Factorization f) { return f.factors; }

}  // namespace

TEST(Polynomial, ArithmeticAndDivision) {
  IntPolynomial a = P({1, 0, -2}), b = P({1, -1});
  EXPECT_EQ(a * b, P({1, -1, -2, 2}));
  auto q = exact_quotient(a * b, b);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, a);
  EXPECT_FALSE(exact_quotient(a, b));
  auto [qq, rr] = divmod(to_rational(a), to_rational(b));
  EXPECT_EQ(qq, to_rational(P({1, 1})));
  EXPECT_EQ(rr, to_rational(P({-1})));
  EXPECT_EQ(to_string(P({1, -5, 10, -8})), "x^3 - 5*x^2 + 10*x - 8");
}

TEST(Polynomial, GcdAndXgcd) {
  RatPolynomial a = to_rational(P({1, 0, -1})), b = to_rational(P({1, -2, 1}));
  EXPECT_EQ(gcd(a, b), to_rational(P({1, -1})));
  auto r = xgcd(a, b);
  EXPECT_EQ(r.s * a + r.t * b, r.g);
}

TEST(Polynomial, SquarefreeDecomposition) {
  IntPolynomial p = P({1, -1}).pow(3) * P({1, 1}) * P({1, 0, 1}).pow(2);
  auto d = squarefree_decomposition(p);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0], std::make_pair(P({1, 1}), 1));
  EXPECT_EQ(d[1], std::make_pair(P({1, 0, 1}), 2));
  EXPECT_EQ(d[2], std::make_pair(P({1, -1}), 3));
}

TEST(Polynomial, Cyclotomic) {
  EXPECT_EQ(cyclotomic(1), P({1, -1}));
  EXPECT_EQ(cyclotomic(12), P({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic(15), P({1, -1, 0, 1, -1, 1, 0, -1, 1}));
}

TEST(Factor, SmallKnownFactorizations) {
  auto f = factor(P({1, 0, 0, 0, 4}));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first, P({1, -2, 2}));
  EXPECT_EQ(f.factors[1].first, P({1, 2, 2}));

  f = factor(P({1, 0, 0, 0, 0, 0, 0, 0, -1}));
  ASSERT_EQ(f.factors.size(), 4u);
  EXPECT_EQ(f.factors[3].first, P({1, 0, 0, 0, 1}));

  EXPECT_TRUE(is_irreducible(P({1, 0, -10, 0, 1})));
}

TEST(Factor, MultiplicityAndContent) {
  IntPolynomial p = Integer(5) * (P({1, 0, -2}) * P({1, 0, 0, -3}).pow(2));
  auto f = factor(p);
  EXPECT_EQ(f.unit, 5);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0], std::make_pair(P({1, 0, -2}), 1));
  EXPECT_EQ(f.factors[1], std::make_pair(P({1, 0, 0, -3}), 2));
}

TEST(Factor, NonMonicProducts) {
  IntPolynomial p = P({3, 0, -5, 3, -3, -2, 26, -8, -32, 5, -26, 21, 35, -35});
  auto f = factor(p);
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0].first, P({3, 0, -5}));
  EXPECT_EQ(f.factors[1].first, P({1, 0, 0, 0, -1, 1}));
  EXPECT_EQ(f.factors[2].first, P({1, 0, 0, 1, 0, 0, 7}));

  p = P({2, 2, 1, 4, 0, 1, -2, -8, -8, -10});
  f = factor(p);
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0].first, P({1, 1, 1}));
  EXPECT_EQ(f.factors[1].first, P({2, 0, -1, 5}));
  EXPECT_EQ(f.factors[2].first, P({1, 0, 0, 0, -2}));
}

TEST(Factor, TwelfthRootsSplitIntoSixCyclotomics) {
  auto f = factor(P({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1}));
  EXPECT_EQ(f.factors.size(), 6u);
  IntPolynomial prod = IntPolynomial::constant(1);
  for (auto& [g, m] : f.factors) prod *= g;
  EXPECT_EQ(prod, P({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1}));
}

TEST(Factor, RandomProductsReassemble) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-6, 6), deg(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    IntPolynomial prod = IntPolynomial::constant(1);
    for (int k = 0; k < 3; ++k) {
      std::vector<Integer> c(deg(rng) + 1);
      for (auto& v : c) v = coef(rng);
      if (c.back() == 0) c.back() = 1;
      prod *= IntPolynomial(c);
    }
    if (prod.is_zero()) continue;
    auto f = factor(prod);
    IntPolynomial back = IntPolynomial::constant(f.unit);
    for (auto& [g, m] : f.factors) {
      back *= g.pow(static_cast<unsigned>(m));
      EXPECT_EQ(g, primitive_part(g));
    }
    EXPECT_EQ(back, prod) << to_string(prod);
  }
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(IntMatrix::identity(2)), P({1, -2, 1}));
  EXPECT_EQ(char_poly(IntMatrix{{0, -1}, {1, 0}}), P({1, 0, 1}));
  EXPECT_EQ(char_poly(IntMatrix{{0, 1, 0}, {0, 0, 1}, {8, -10, 5}}), P({1, -5, 10, -8}));
  EXPECT_EQ(char_poly(IntMatrix{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}), P({1, -9, 24, -18}));
  EXPECT_EQ(char_poly(IntMatrix{{1, 2, 3, 4}, {0, 1, -1, 2}, {5, 0, 2, 1}, {1, 1, 1, 1}}), P({1, -5, -13, 27, 26}));
}

TEST(CharPoly, CayleyHamiltonRandom) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-5, 5);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 5; ++t) {
      RationalMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
      EXPECT_TRUE(evaluate(to_rational(char_poly(m)), m).is_zero_matrix());
      RatPolynomial mp = minimal_polynomial(m);
      EXPECT_TRUE(evaluate(mp, m).is_zero_matrix());
      EXPECT_TRUE(rem(char_poly_rational(m), mp).is_zero());
    }
}

TEST(CharPoly, MinimalPolynomialOfJordanBlock) {
  RationalMatrix j{{1, 1}, {0, 1}};
  EXPECT_EQ(minimal_polynomial(j), to_rational(P({1, -2, 1})));
  EXPECT_EQ(minimal_polynomial(RationalMatrix::identity(3)), to_rational(P({1, -1})));
}

TEST(LinearAlgebra, SolveRational) {
  RationalMatrix m{{1, 2}, {2, 4}};
  auto s = solve_linear_exact(m, RatVector{Rational(3), Rational(6)});
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.kernel.size(), 1u);
  auto bad = solve_linear_exact(m, RatVector{Rational(3), Rational(7)});
  EXPECT_FALSE(bad.consistent);
  auto id = solve_linear_exact(RationalMatrix::identity(2), RatVector{Rational(5), Rational(-1, 3)});
  EXPECT_EQ(id.particular, (RatVector{Rational(5), Rational(-1, 3)}));
  EXPECT_TRUE(id.kernel.empty());
}
