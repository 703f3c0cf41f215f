#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>

#include "gspecht/parallel.hpp"
#include "gspecht/report.hpp"
#include "gspecht/suites.hpp"

using namespace gspecht;

TEST(Parallel, ResultsInIndexOrder) {
  for (unsigned t : {1u, 2u, 7u}) {
    auto v = parallel_map(50, t, [](std::size_t k) { return static_cast<int>(k * k); });
    ASSERT_EQ(v.size(), 50u);
    for (std::size_t k = 0; k < v.size(); ++k) EXPECT_EQ(v[k], static_cast<int>(k * k));
  }
  EXPECT_TRUE(parallel_map(0, 4, [](std::size_t) { return 1; }).empty());
}

TEST(Parallel, SmallestFailingIndexWins) {
  auto f = [](std::size_t k) -> int {
    if (k == 3 || k == 9) throw std::runtime_error("boom " + std::to_string(k));
    return 0;
  };
  for (unsigned t : {1u, 4u}) {
    try {
      parallel_map(20, t, f);
      FAIL();
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "boom 3");
    }
  }
}

TEST(Parallel, EnvironmentOverride) {
  ::setenv("GSPECHT_THREADS", "3", 1);
  EXPECT_EQ(resolve_threads(1), 3u);
  ::setenv("GSPECHT_THREADS", "x", 1);
  EXPECT_THROW(resolve_threads(1), ParameterError);
  ::unsetenv("GSPECHT_THREADS");
  EXPECT_EQ(resolve_threads(2), 2u);
  EXPECT_GE(resolve_threads(0), 1u);
}

TEST(Report, CharacterJson) {
  auto ch = graded_character(parse_multipartition("2,1"), AlgebraParams::combinatorial(3, {0}));
  auto j = character_json(ch);
  EXPECT_EQ(j.dump(), R"([{"poly":{"0":1},"weight":[0,1,2]},{"poly":{"1":1},"weight":[0,2,1]}])");
}

TEST(Report, RoundTripAndDeterminism) {
  AlgebraRunOptions o;
  o.suites = {true, true, true, true};
  auto params = AlgebraParams::make(FieldSpec::prime_field(7, 3), {0, 1});
  o.threads = 1;
  auto a = run_algebra_point(params, 3, o);
  o.threads = 3;
  auto b = run_algebra_point(params, 3, o);
  EXPECT_EQ(a.dump(2), b.dump(2));
  EXPECT_EQ(Json::parse(a.dump(2)).dump(2), a.dump(2));
  EXPECT_TRUE(all_ok(a));
}

TEST(Report, AllOkSeesNestedFailures) {
  Json j{{"x", Json::array({to_json(CheckResult("a")), Json{{"y", to_json(CheckResult("b", false, "no"))}}})}};
  EXPECT_FALSE(all_ok(j));
  EXPECT_TRUE(all_ok(Json{{"x", to_json(CheckResult("a"))}}));
}

TEST(Report, RandomChargesInRange) {
  for (auto& c : random_charges(0, 3, 20, 5))
    for (int x : c) EXPECT_TRUE(x >= -3 && x <= 3);
  for (auto& c : random_charges(4, 2, 20, 5))
    for (int x : c) EXPECT_TRUE(x >= 0 && x < 4);
  EXPECT_EQ(random_charges(3, 2, 5, 9), random_charges(3, 2, 5, 9));
}
