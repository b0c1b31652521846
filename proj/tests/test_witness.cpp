#include <gtest/gtest.h>

#include <llterm/loop.hpp>
#include <llterm/witness.hpp>

#include <random>

using namespace llterm;

namespace {

IntMatrix row(std::vector<long> v) {
  IntMatrix m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
  return m;
}

IntMatrix square(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

ExactValue rat(long p, long q = 1) { return ExactValue::of(AlgebraicNumber(Rational(p, q))); }

Rational guard_at(const LoopProgram& p, const IntVector& u, int n) {
  IntVector x = u;
  for (int s = 0; s < n; ++s) {
    IntVector y(p.dim);
    for (std::size_t i = 0; i < p.dim; ++i) {
      y[i] = p.a[i];
      for (std::size_t j = 0; j < p.dim; ++j) y[i] += p.A(i, j) * x[j];
    }
    x = std::move(y);
  }
  Integer g = -p.c[0];
  for (std::size_t j = 0; j < p.dim; ++j) g += p.B(0, j) * x[j];
  return Rational(g);
}

}  // namespace

TEST(TorusMin, ConstantFunction) {
  auto r = torus_min(rat(5), {}, torus_group(IntMatrix(0, 0), 0));
  EXPECT_EQ(r.sign, TorusSign::NonNeg);
  EXPECT_EQ(r.lower_bound, 5);
}

TEST(TorusMin, FullCircleClosedForm) {
  TorusGroup full = torus_group(IntMatrix(0, 1), 1);
  EXPECT_EQ(torus_min(rat(1), {rat(1)}, full).sign, TorusSign::Neg);
  // 2 - 2|1| = 0 sits on the boundary
  auto r = torus_min(rat(2), {rat(1)}, full);
  EXPECT_EQ(r.sign, TorusSign::NonNeg);
  EXPECT_TRUE(r.boundary);
  EXPECT_EQ(torus_min(rat(3), {ExactValue::of(AlgebraicNumber::imaginary_unit())}, full).sign, TorusSign::NonNeg);
}

TEST(TorusMin, SinglePointAndRootsOfUnity) {
  // T = {1}: f(1) = a + 2 Re b
  TorusGroup point = torus_group(row({1}), 1);
  auto r = torus_min(rat(-2), {rat(1)}, point);
  EXPECT_EQ(r.sign, TorusSign::NonNeg);
  EXPECT_TRUE(r.boundary);
  // fourth roots: min of 1 + 2 Re(b z) over z^4 = 1 with b = 1/4 is 1/2
  TorusGroup four = torus_group(row({4}), 1);
  r = torus_min(rat(1), {rat(1, 4)}, four);
  EXPECT_EQ(r.sign, TorusSign::NonNeg);
  EXPECT_EQ(r.lower_bound > Rational(49, 100), true);
  EXPECT_EQ(torus_min(rat(1), {rat(3, 4)}, four).sign, TorusSign::Neg);
}

TEST(TorusMin, PowerCurveBranchAndBound) {
  // z2 = z1^2: f = a + 2 Re(z) + 2 Re(z^2); min over the circle is a - 9/4... check sign on both sides
  TorusGroup curve = torus_group(row({2, -1}), 2);
  // min of 2cos t + 2cos 2t is -2.25 at cos t = -1/4
  EXPECT_EQ(torus_min(rat(23, 10), {rat(1), rat(1)}, curve).sign, TorusSign::NonNeg);
  EXPECT_EQ(torus_min(rat(22, 10), {rat(1), rat(1)}, curve).sign, TorusSign::Neg);
  // the full 2-torus would give 2.3 - 4 < 0
  EXPECT_EQ(torus_min(rat(23, 10), {rat(1), rat(1)}, torus_group(IntMatrix(0, 2), 2)).sign, TorusSign::Neg);
}

TEST(TorusMin, NonPositiveMeanIsNegative) {
  TorusGroup curve = torus_group(row({2, -1}), 2);
  auto r = torus_min(rat(0), {rat(1, 1000), rat(0)}, curve);
  EXPECT_EQ(r.sign, TorusSign::Neg);
}

TEST(ZeroSet, JordanBlockIsOrigin) {
  IntMatrix A = square({{1, -1}, {0, 1}});
  SpectralData s = eigendecompose(A);
  CoefficientData c = coefficient_vectors(s, RatVector{Rational(1), Rational(0)});
  ZeroSet z = zero_set(s, c);
  EXPECT_TRUE(z.contains(RatVector{Rational(0), Rational(0)}));
  EXPECT_FALSE(z.contains(RatVector{Rational(1), Rational(0)}));
  EXPECT_FALSE(z.contains(RatVector{Rational(0), Rational(1)}));
  EXPECT_FALSE(dominant_component(s, c, RatVector{Rational(0), Rational(0)}));
  EXPECT_EQ(dominant_component(s, c, RatVector{Rational(0), Rational(3)}), std::optional<std::size_t>(0));
}

TEST(ZeroSet, MatchesSimulation) {
  // diag(2, 1) with a rotation block: guard x + y
  LoopProgram p = parse_loop("vars x, y, z; while x + y >= 0 do x := 2*x, y := y - z, z := y + z");
  auto [h, cert] = homogenize(p);
  SpectralData s = eigendecompose(h.A);
  RatVector b(h.dim);
  for (std::size_t j = 0; j < h.dim; ++j) b[j] = h.B(0, j);
  CoefficientData c = coefficient_vectors(s, b);
  ZeroSet z = zero_set(s, c);
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-3, 3);
  RationalMatrix Ah = to_rational(h.A);
  int zero_hits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    RatVector v(h.dim);
    for (auto& x : v) x = d(rng);
    v[3] = 0;
    if (trial % 3 == 0) v = RatVector{Rational(0), Rational(d(rng)), Rational(0), Rational(0)};
    bool all_zero = true;
    RatVector x = v;
    for (int n = 0; n <= 30; ++n) {
      Rational g = 0;
      for (std::size_t j = 0; j < h.dim; ++j) g += b[j] * x[j];
      if (n >= static_cast<int>(h.dim) && g != 0) all_zero = false;
      x = Ah.apply(x);
    }
    EXPECT_EQ(z.contains(v), all_zero);
    zero_hits += all_zero;
  }
  EXPECT_GT(zero_hits, 0);
}

TEST(Classify, Cases) {
  // simple positive real with a simple complex pair of the same modulus
  SpectralData s = eigendecompose(square({{0, 0, 8}, {1, 0, -10}, {0, 1, 5}}));
  ASSERT_FALSE(s.classes.empty());
  EXPECT_EQ(classify_class(s, 0).tag, CaseTag::III);
  // rotation only
  s = eigendecompose(square({{1, -1}, {1, 1}}));
  EXPECT_EQ(classify_class(s, 0).tag, CaseTag::II);
  // ladder of height 2
  s = eigendecompose(square({{1, 1}, {0, 1}}));
  auto piece = classify_class(s, 0);
  EXPECT_EQ(piece.tag, CaseTag::III);
  EXPECT_EQ(piece.top_level, 1u);
}

TEST(Witness, IncrementAndDecrement) {
  LoopProgram inc = parse_loop("vars x; while x >= 0 do x := x + 1");
  WitnessSet w = WitnessSet::build(inc);
  EXPECT_EQ(w.membership(IntVector{Integer(-5)}), Membership::In);
  for (long u = -20; u <= 20; ++u) EXPECT_EQ(w.membership(IntVector{Integer(u)}), Membership::In);

  LoopProgram dec = parse_loop("vars x; while x >= 0 do x := x - 1");
  WitnessSet v = WitnessSet::build(dec);
  EXPECT_EQ(v.membership(IntVector{Integer(100)}), Membership::Out);
  for (long u = -20; u <= 20; ++u) EXPECT_EQ(v.membership(IntVector{Integer(u)}), Membership::Out);
}

TEST(Witness, HomogeneousOriginIsMember) {
  for (const char* src : {"vars x, y; while x >= y do x := x - y, y := x + y",
                          "vars x, y; while x - 2*y >= 0 do x := 3*x + y, y := -x",
                          "vars x; while x >= 0 do x := -x"}) {
    WitnessSet w = WitnessSet::build(parse_loop(src));
    EXPECT_EQ(w.membership(IntVector(w.reduced().original.dim, Integer(0))), Membership::In) << src;
  }
}

TEST(Witness, RotationLoopNeverEventuallyNonTerminating) {
  WitnessSet w = WitnessSet::build(parse_loop("vars x, y; while x >= 0 do x := x - y, y := x + y"));
  EXPECT_EQ(w.membership(IntVector{Integer(1), Integer(0)}), Membership::Out);
  EXPECT_EQ(w.membership(IntVector{Integer(-3), Integer(7)}), Membership::Out);
}

TEST(Witness, AgreesWithLongSimulation) {
  // (x - 2)(x^2 - 2x + 4): 2 and 1 +- i sqrt 3 differ by sixth roots of unity
  const char* srcs[] = {
      "vars x, y, z; while x >= 0 do x := y, y := z, z := 8*x - 8*y + 4*z",
      "vars x, y; while x + y >= 3 do x := 2*x + y, y := y + 1",
      // 5 and 3 +- 4i: the ratio is not a root of unity, so the torus check runs
      "vars x, y, z; while x >= 0 do x := y, y := z, z := 125*x - 55*y + 11*z",
      "vars x, y; while x - y >= 0 do x := x + 2, y := 3*y",
  };
  for (const char* src : srcs) {
    LoopProgram p = parse_loop(src);
    WitnessSet w = WitnessSet::build(p);
    ASSERT_TRUE(w.supported()) << src;
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int trial = 0; trial < 25; ++trial) {
      IntVector u(p.dim);
      for (auto& x : u) x = d(rng);
      Membership m = w.membership(u);
      ASSERT_NE(m, Membership::Inconclusive) << src;
      // tail of the guard sequence far from the transient
      bool tail_ok = true;
      for (int n = 40; n <= 60; ++n) tail_ok = tail_ok && guard_at(p, u, n) >= 0;
      EXPECT_EQ(m == Membership::In, tail_ok) << src << " trial " << trial;
    }
  }
}
