#include <gtest/gtest.h>

#include <llterm/spectral.hpp>

#include <random>

using namespace llterm;

namespace {
RatVector R(std::initializer_list<long> v) {
  RatVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}
Rational direct(const IntMatrix& A, const RatVector& b, const RatVector& u, unsigned long n) {
  RationalMatrix P = to_rational(A).pow(n, Rational(1), Rational(0));
  RatVector w = P.apply(u);
  Rational s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += b[i] * w[i];
  return s;
}
const IntMatrix kCompanion{{0, 1, 0}, {0, 0, 1}, {8, -10, 5}};
}  // namespace

TEST(Eigendecompose, Identity) {
  SpectralData s = eigendecompose(IntMatrix::identity(2));
  ASSERT_EQ(s.eigenvalues.size(), 1u);
  EXPECT_EQ(s.eigenvalues[0].index, 1u);
  EXPECT_EQ(s.classes.size(), 1u);
}

TEST(Eigendecompose, JordanBlock) {
  SpectralData s = eigendecompose(IntMatrix{{1, -1}, {0, 1}});
  ASSERT_EQ(s.eigenvalues.size(), 1u);
  EXPECT_EQ(s.eigenvalues[0].index, 2u);
  EXPECT_EQ(s.min_poly_degree(), 2u);
  ASSERT_TRUE(s.classes[0].positive_real.has_value());
}

TEST(Eigendecompose, CompanionSingleClass) {
  SpectralData s = eigendecompose(kCompanion);
  EXPECT_EQ(s.eigenvalues.size(), 3u);
  ASSERT_EQ(s.classes.size(), 1u);
  const ModulusClass& c = s.classes[0];
  EXPECT_TRUE(c.positive_real.has_value());
  EXPECT_EQ(c.complex_upper.size(), 1u);
  EXPECT_TRUE(alg_equals(c.modulus_squared, AlgebraicNumber(4)));
}

TEST(Eigendecompose, ClassesStrictlyDecreasing) {
  // eigenvalues 3, -2, 1 +- i (|.|^2 = 2), 1
  IntMatrix A{{3, 0, 0, 0, 0}, {0, -2, 0, 0, 0}, {0, 0, 1, -1, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}};
  SpectralData s = eigendecompose(A);
  ASSERT_EQ(s.classes.size(), 4u);
  for (std::size_t i = 1; i < s.classes.size(); ++i)
    EXPECT_GT(alg_compare(s.classes[i - 1].modulus_squared, s.classes[i].modulus_squared), 0);
  EXPECT_TRUE(s.classes[1].negative_real.has_value());
  EXPECT_EQ(s.classes[2].complex_upper.size(), 1u);
}

TEST(Supported, Rules) {
  SpectralData s = eigendecompose(kCompanion);
  EXPECT_TRUE(check_supported(s, 3).supported);
  // (x^2 + x + 2)^2 companion plus two fixed coordinates: complex index 2 in dimension 6
  IntMatrix A(6, 6);
  // x^4 + 2x^3 + 5x^2 + 4x + 4
  long c[4] = {4, 4, 5, 2};
  for (int i = 0; i < 3; ++i) A(i, i + 1) = 1;
  for (int j = 0; j < 4; ++j) A(3, j) = -c[j];
  A(4, 4) = 1;
  A(5, 5) = 1;
  SpectralData t = eigendecompose(A);
  EXPECT_FALSE(check_supported(t, 6).supported);
  IntMatrix B(5, 5);
  for (int i = 0; i < 3; ++i) B(i, i + 1) = 1;
  for (int j = 0; j < 4; ++j) B(3, j) = -c[j];
  B(4, 4) = 1;
  EXPECT_TRUE(check_supported(eigendecompose(B), 5).supported);
}

TEST(Coefficients, JordanExample) {
  IntMatrix A{{1, -1}, {0, 1}};
  SpectralData s = eigendecompose(A);
  CoefficientData c = coefficient_vectors(s, R({1, 0}));
  EXPECT_EQ(c.scale, 1);
  std::size_t f = s.eigenvalues[0].family;
  ASSERT_EQ(c.alpha[f].size(), 2u);
  EXPECT_EQ(c.alpha[f][0][0], FieldElement(1));
  EXPECT_EQ(c.alpha[f][0][1], FieldElement(0));
  EXPECT_EQ(c.alpha[f][1][0], FieldElement(0));
  EXPECT_EQ(c.alpha[f][1][1], FieldElement(-1));
  for (unsigned n = 4; n <= 10; ++n) EXPECT_EQ(expansion_value(s, c, R({7, 3}), n), direct(A, R({1, 0}), R({7, 3}), n));
}

TEST(Coefficients, IdentitySingleTerm) {
  SpectralData s = eigendecompose(IntMatrix::identity(3));
  CoefficientData c = coefficient_vectors(s, R({1, 0, 0}));
  std::size_t f = s.eigenvalues[0].family;
  ASSERT_EQ(c.alpha[f].size(), 1u);
  EXPECT_EQ(c.alpha[f][0][0], FieldElement(1));
  EXPECT_TRUE(c.alpha[f][0][1].is_zero());
}

TEST(Coefficients, CompanionConjugatePairAndResidual) {
  SpectralData s = eigendecompose(kCompanion);
  RatVector b = R({1, 2, -1});
  CoefficientData c = coefficient_vectors(s, b);
  const ModulusClass& cls = s.classes[0];
  std::size_t e = cls.complex_upper[0];
  std::size_t ec = 0;
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    if (i != e && s.eigenvalues[i].family == s.eigenvalues[e].family) ec = i;
  auto beta = coefficient_vector(s, c, e, 0);
  auto beta_bar = coefficient_vector(s, c, ec, 0);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(alg_equals(alg_conj(beta[j]), beta_bar[j]));
  // scaled coordinates are integers
  for (const auto& fam : c.alpha)
    for (const auto& ak : fam)
      for (const auto& x : ak)
        for (const auto& q : x.coordinates()) EXPECT_EQ(q.get_den(), 1);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 5; ++t) {
    RatVector u = R({d(rng), d(rng), d(rng)});
    for (unsigned n = 3; n <= 20; ++n) EXPECT_EQ(expansion_value(s, c, u, n), direct(kCompanion, b, u, n));
  }
}

TEST(Coefficients, RandomMatricesExact) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 12; ++t) {
    std::size_t n = 2 + t % 3;
    IntMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) A(i, j) = d(rng);
    if (t % 4 == 0) A(0, n - 1) = 0;
    SpectralData s = eigendecompose(A);
    RatVector b(n), u(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = d(rng);
      u[i] = d(rng);
    }
    CoefficientData c = coefficient_vectors(s, b);
    for (unsigned k = n; k <= n + 20; ++k) EXPECT_EQ(expansion_value(s, c, u, k), direct(A, b, u, k)) << t;
  }
}

TEST(Projectors, Algebra) {
  IntMatrix A{{2, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  SpectralData s = eigendecompose(A);
  KMatrix AK(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) AK(i, j) = FieldElement(Rational(A(i, j)));
  for (const auto& f : s.families) {
    EXPECT_EQ(f.projector * f.projector, f.projector);
    EXPECT_EQ(AK * f.projector, f.projector * AK);
  }
  RatVector u = R({5, -2, 3, 7});
  EXPECT_EQ(sum_of_components(s, u), u);
  // eigenvector of the lower class is its own component
  auto comps = project_components(s, R({0, 0, 1, 0}));
  for (const auto& cc : comps)
    for (const auto& [e, vec] : cc.terms)
      if (cc.cls == 0)
        for (const auto& x : vec) EXPECT_TRUE(x.is_zero());
}

TEST(Stirling, FirstKind) {
  auto s = stirling_row(4);  // n(n-1)(n-2)(n-3) = n^4 - 6n^3 + 11n^2 - 6n
  EXPECT_EQ(s[4], 1);
  EXPECT_EQ(s[3], -6);
  EXPECT_EQ(s[2], 11);
  EXPECT_EQ(s[1], -6);
  EXPECT_EQ(s[0], 0);
}
