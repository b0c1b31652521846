#include <gtest/gtest.h>

#include <llterm/loop.hpp>

using namespace llterm;

TEST(Parser, SimultaneousAssignment) {
  LoopProgram p = parse_loop("vars x y;  # rotation\nwhile x >= 0\ndo x := x - y, y := x + y\n");
  EXPECT_EQ(p.dim, 2u);
  EXPECT_EQ(p.A(0, 0), 1);
  EXPECT_EQ(p.A(0, 1), -1);
  EXPECT_EQ(p.A(1, 0), 1);
  EXPECT_EQ(p.A(1, 1), 1);
  EXPECT_EQ(p.B(0, 0), 1);
  EXPECT_EQ(p.c[0], 0);
}

TEST(Parser, GuardsConstantsAndCoefficients) {
  LoopProgram p = parse_loop("vars a b\nwhile 2*a - b + 3 >= b and a >= -5 do a := a - 1, b := 3b + 2");
  ASSERT_EQ(p.guard_count(), 2u);
  EXPECT_EQ(p.B(0, 0), 2);
  EXPECT_EQ(p.B(0, 1), -2);
  EXPECT_EQ(p.c[0], -3);
  EXPECT_EQ(p.c[1], -5);
  EXPECT_EQ(p.a[0], -1);
  EXPECT_EQ(p.A(1, 1), 3);
  EXPECT_EQ(p.a[1], 2);
  EXPECT_FALSE(p.homogeneous());
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    parse_loop("vars x\nwhile x > 0 do x := x - 1");
    FAIL();
  } catch (const LoopParseError& e) {
    EXPECT_EQ(e.line, 2);
    EXPECT_EQ(e.column, 9);
  }
  EXPECT_THROW(parse_loop("vars x\nwhile y >= 0 do x := x"), LoopParseError);
  EXPECT_THROW(parse_loop("vars x\nwhile x >= 0 do x := x, x := 1"), LoopParseError);
  EXPECT_THROW(parse_loop("vars x\nwhile x >= 0.5 do x := x"), LoopParseError);
}

TEST(Parser, RoundTripTextAndJson) {
  LoopProgram p = parse_loop("vars x y z\nwhile x + y >= 1 and z >= 0 do x := 2x - z + 1, z := y");
  LoopProgram q = parse_loop(to_loop_text(p));
  EXPECT_EQ(q.A, p.A);
  EXPECT_EQ(q.B, p.B);
  EXPECT_EQ(q.a, p.a);
  EXPECT_EQ(q.c, p.c);
  LoopProgram r = parse_loop_any(to_loop_json(p));
  EXPECT_EQ(r.A, p.A);
  EXPECT_EQ(r.c, p.c);
  EXPECT_EQ(r.vars, p.vars);
  EXPECT_THROW(parse_loop_json("{\"dim\":2,\"A\":[[1]],\"B\":[[1,0]],\"c\":[0]}"), LoopParseError);
}

TEST(Reductions, HomogenizeThenSplit) {
  LoopProgram p = parse_loop("vars x\nwhile x >= 3 and -x >= -10 do x := x - 1");
  auto [h, cert] = homogenize(p);
  EXPECT_EQ(cert.kind, ReductionCertificate::Kind::Homogenize);
  EXPECT_TRUE(h.homogeneous());
  EXPECT_EQ(h.dim, 2u);
  EXPECT_EQ(h.A(0, 1), -1);
  EXPECT_EQ(h.A(1, 1), 1);
  EXPECT_EQ(h.B(0, 1), -3);
  EXPECT_EQ(h.B(1, 1), 10);
  auto rows = split_rows(h);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[1].single_guard());
  EXPECT_EQ(rows[1].provenance.back().parameter, 1u);
}

TEST(Reductions, ComputeL) {
  EXPECT_EQ(compute_L(IntMatrix{{0, -1}, {1, 0}}), 2u);         // +-i
  EXPECT_EQ(compute_L(IntMatrix{{1, -1}, {1, 1}}), 4u);         // 1 +- i
  EXPECT_EQ(compute_L(IntMatrix{{2, 0}, {0, 3}}), 1u);
  EXPECT_EQ(compute_L(IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), 3u);  // cube roots of unity
  EXPECT_EQ(compute_L(IntMatrix{{-1, 0}, {0, 1}}), 2u);
  EXPECT_EQ(compute_L(IntMatrix{{3, 4}, {-4, 3}}), 1u);         // 3 +- 4i, quotient not a root of unity
  auto [q, cert] = depower(parse_loop("vars x y\nwhile x >= 0 do x := -y, y := x"), 2);
  EXPECT_EQ(q.A, (IntMatrix{{-1, 0}, {0, -1}}));
  EXPECT_EQ(cert.parameter, 2u);
}
