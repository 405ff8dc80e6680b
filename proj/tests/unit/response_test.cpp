#include <gtest/gtest.h>

#include "fdh/oracle.hpp"
#include "fdh/response.hpp"
#include "support/error_code.hpp"
#include "support/example_data.hpp"

namespace fdh {
namespace {

using testing::code_of;
using testing::example1;
using testing::kA;
using testing::kB;
using testing::kC;
using testing::kD;
using testing::q;

TEST(Response, ExampleStepsOfB) {
  const auto r = build_response(example1<Rational>(), kB);
  const std::vector<Step<Rational>> expected = {
      {q(1, 3), q(1, 2), kA}, {q(1), q(1), kB}, {q(5, 3), q(5, 4), kC}, {q(2), q(13, 4), kD}};
  EXPECT_EQ(r.steps(), expected);
  EXPECT_EQ(r.alpha_min(), q(1, 3));
  EXPECT_EQ(r(q(1, 3)), q(1, 2));
  EXPECT_EQ(r(q(9, 10)), q(1, 2));
  EXPECT_EQ(r(q(1)), q(1));
  EXPECT_EQ(r(q(3, 2)), q(1));
  EXPECT_EQ(r(q(5, 3)), q(5, 4));
  EXPECT_EQ(r(q(1000)), q(13, 4));
  EXPECT_EQ(code_of([&] { r(q(1, 4)); }), ErrorCode::kOutOfDomain);
}

TEST(Response, DominatedUnitsDoNotCreateSteps) {
  const auto d = make_dataset<Rational>({"P", "Q", "R"}, {{1}, {2}, {3}}, {{4}, {3}, {5}});
  const auto r = build_response(d, 2);
  ASSERT_EQ(r.steps().size(), 2u);
  EXPECT_EQ(r.steps()[0].unit, 0u);
  EXPECT_EQ(r.steps()[1].unit, 2u);
}

TEST(Response, ConstructorRejectsNonIncreasingSteps) {
  EXPECT_EQ(code_of([] {
              ResponseFunction<double>(0, {{1.0, 2.0, 0}, {1.0, 3.0, 1}});
            }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] {
              ResponseFunction<double>(0, {{1.0, 2.0, 0}, {2.0, 2.0, 1}});
            }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { ResponseFunction<double>(0, {}); }), ErrorCode::kInvalidArgument);
}

TEST(StepDerivatives, ExampleUnits) {
  const auto d = example1<Rational>();
  const auto b = one_sided_step_derivatives(d, kB);
  EXPECT_EQ(b.right, StepDerivative::kZero);
  EXPECT_EQ(b.left, StepDerivative::kInfinite);
  EXPECT_EQ(one_sided_step_derivatives(d, kC).left, StepDerivative::kInfinite);
  EXPECT_EQ(one_sided_step_derivatives(d, kD).left, StepDerivative::kInfinite);
  EXPECT_EQ(one_sided_step_derivatives(d, kD).right, StepDerivative::kZero);
  // A has the smallest input, so nothing lies to the left of 1.
  EXPECT_EQ(one_sided_step_derivatives(d, kA).left, StepDerivative::kUndefined);
  EXPECT_STREQ(to_string(StepDerivative::kInfinite), "inf");
}

TEST(StepDerivatives, InefficientUnitRejected) {
  const auto d = make_dataset<Rational>({"P", "Q"}, {{1}, {2}}, {{3}, {2}});
  EXPECT_EQ(code_of([&] { one_sided_step_derivatives(d, 1); }), ErrorCode::kInefficientUnit);
  EXPECT_EQ(code_of([&] { one_sided_step_derivatives(build_response(d, 1)); }),
            ErrorCode::kInefficientUnit);
}

// Every grid point of [alpha_min, 2.5] for every example unit.
TEST(Response, ExampleGridMatchesMembershipOracle) {
  const auto d = example1<Rational>();
  constexpr int kSteps = 10000;
  for (std::size_t o = 0; o < d.size(); ++o) {
    const auto r = build_response(d, o);
    const Rational lo = r.alpha_min();
    const Rational hi = q(5, 2);
    for (int k = 0; k <= kSteps; ++k) {
      const Rational a = lo + (hi - lo) * Rational(k, kSteps);
      const auto expected = oracle::oracle_response_value(d, o, a);
      ASSERT_TRUE(expected.has_value());
      ASSERT_EQ(r(a), *expected) << "unit " << o << " alpha " << a;
    }
    EXPECT_FALSE(oracle::oracle_response_value(d, o, lo / 2).has_value());
  }
}

TEST(Response, RandomDataMatchesOracleAndIsMonotone) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto d = oracle::random_dataset(seed);
    for (std::size_t o = 0; o < d.size(); ++o) {
      const auto table = ratio_table(d, o);
      const auto r = build_response(table);
      const auto& steps = r.steps();
      for (std::size_t k = 0; k < steps.size(); ++k) {
        if (k > 0) {
          EXPECT_LT(steps[k - 1].threshold, steps[k].threshold);
          EXPECT_LT(steps[k - 1].value, steps[k].value);
        }
        EXPECT_EQ(table.alpha[steps[k].unit], steps[k].threshold);
        EXPECT_EQ(table.beta[steps[k].unit], steps[k].value);
        EXPECT_EQ(oracle::oracle_response_value(d, o, steps[k].threshold), steps[k].value);
        const Rational mid = k + 1 < steps.size()
                                 ? (steps[k].threshold + steps[k + 1].threshold) / 2
                                 : steps[k].threshold * 2;
        EXPECT_EQ(oracle::oracle_response_value(d, o, mid), steps[k].value);
      }
      for (std::size_t j = 0; j < d.size(); ++j) EXPECT_GE(r(table.alpha[j]), table.beta[j]);
    }
  }
}

}  // namespace
}  // namespace fdh
