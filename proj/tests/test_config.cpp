#include <llterm/config.hpp>

#include <gtest/gtest.h>

#include <cstdlib>

using namespace llterm;

TEST(Config, DefaultsAreValid) {
  Config c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.decision.radius_schedule, (std::vector<long>{4, 32, 256, 2048, 16384}));
  EXPECT_EQ(c.format, "text");
  EXPECT_EQ(c.threads, 1u);
}

TEST(Config, TextOverridesFields) {
  Config c;
  c.apply_text(
      "# tuned for a small box\n"
      "[search]\n"
      "radius_schedule = 2, 8\n"
      "m_max = 40\n"
      "lattice_c = 1.5\n"
      "saturation_doublings = 2\n"
      "format = json\n");
  c.validate();
  EXPECT_EQ(c.decision.radius_schedule, (std::vector<long>{2, 8}));
  ASSERT_TRUE(c.decision.m_max);
  EXPECT_EQ(*c.decision.m_max, 40u);
  EXPECT_DOUBLE_EQ(c.decision.witness.relations.c, 1.5);
  EXPECT_EQ(c.decision.witness.relations.audit_doublings, 2);
  EXPECT_EQ(c.format, "json");
}

TEST(Config, RejectsBadInput) {
  Config c;
  EXPECT_THROW(c.apply_text("radius_schedule = 8, 4\n"), ConfigError);
  Config d;
  EXPECT_THROW(d.apply_text("nonsense = 1\n"), ConfigError);
  Config e;
  EXPECT_THROW(e.apply_text("m_max = many\n"), ConfigError);
  Config f;
  f.threads = 0;
  EXPECT_THROW(f.validate(), ConfigError);
}

TEST(Config, EnvironmentWinsForThreads) {
  Config c;
  c.apply_text("threads = 2\n");
  setenv("LLTERM_THREADS", "3", 1);
  c.apply_environment();
  unsetenv("LLTERM_THREADS");
  EXPECT_EQ(c.threads, 3u);
}
