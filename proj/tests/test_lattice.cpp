#include <gtest/gtest.h>

#include <llterm/lattice.hpp>

#include <random>

using namespace llterm;

namespace {
RationalMatrix R(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}
IntMatrix I(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}
}  // namespace

TEST(Hermite, SmallLattice) {
  IntMatrix h = hermite_normal_form(I({{2, 4}, {6, 8}}));
  EXPECT_EQ(h, I({{2, 0}, {0, 4}}));
  EXPECT_TRUE(in_row_lattice(h, {Integer(4), Integer(4)}));
  EXPECT_FALSE(in_row_lattice(h, {Integer(1), Integer(0)}));
  EXPECT_FALSE(in_row_lattice(h, {Integer(2), Integer(2)}));
}

TEST(Hermite, DropsDependentRows) {
  IntMatrix h = hermite_normal_form(I({{1, 2, 3}, {2, 4, 6}, {0, 0, 5}}));
  EXPECT_EQ(h, I({{1, 2, 3}, {0, 0, 5}}));
}

TEST(Smith, TextbookExample) {
  IntMatrix m = I({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.rank, 3u);
  ASSERT_EQ(s.divisors.size(), 3u);
  EXPECT_EQ(s.divisors[0], 2);
  EXPECT_EQ(s.divisors[1], 6);
  EXPECT_EQ(s.divisors[2], 12);
  EXPECT_EQ(s.U * m * s.V, s.D);
}

TEST(Smith, RankDeficientRow) {
  IntMatrix m = I({{2, -1}});
  SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.rank, 1u);
  EXPECT_EQ(s.divisors[0], 1);
  EXPECT_EQ(s.U * m * s.V, s.D);
}

TEST(Smith, RandomIdentity) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int t = 0; t < 30; ++t) {
    IntMatrix m(3 + t % 2, 4);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = d(rng);
    SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.U * m * s.V, s.D);
    for (std::size_t k = 1; k < s.divisors.size(); ++k) EXPECT_EQ(s.divisors[k] % s.divisors[k - 1], 0);
  }
}

TEST(IntegerSolutions, NoSolutionForHalf) {
  EXPECT_FALSE(integer_solutions(R({{2}}), {Rational(1)}).has_value());
  EXPECT_FALSE(integer_solutions(R({{2, 4}}), {Rational(3)}).has_value());
  EXPECT_FALSE(integer_solutions(R({{1, 1}, {1, 1}}), {Rational(1), Rational(2)}).has_value());
}

TEST(IntegerSolutions, LineAndPoint) {
  auto s = integer_solutions(R({{2, 4}}), {Rational(6)});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->dim(), 1u);
  for (long z = -3; z <= 3; ++z) {
    IntVector p = s->point({Integer(z)});
    EXPECT_EQ(2 * p[0] + 4 * p[1], 6);
  }
  auto t = integer_solutions(R({{1, 1}, {1, -1}}), {Rational(4), Rational(2)});
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->dim(), 0u);
  EXPECT_EQ(t->x0[0], 3);
  EXPECT_EQ(t->x0[1], 1);
  // rational coefficients
  auto u = integer_solutions(R({{1, 1}}), {Rational(1, 2)});
  EXPECT_FALSE(u.has_value());
}

TEST(ClearDenominators, CoprimeIntegers) {
  IntVector v = clear_denominators({Rational(1, 2), Rational(-3, 4), Rational(0)});
  EXPECT_EQ(v, (IntVector{Integer(2), Integer(-3), Integer(0)}));
}
