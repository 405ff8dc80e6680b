#include <gtest/gtest.h>

#include "fdh/model.hpp"
#include "fdh/oracle.hpp"
#include "support/error_code.hpp"
#include "support/example_data.hpp"

namespace fdh {
namespace {

using testing::code_of;
using testing::example1;
using testing::kA;
using testing::kB;
using testing::kD;
using testing::q;

TEST(ValidateDataset, AcceptsExampleTable) {
  const auto d = example1<Rational>();
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(d.num_inputs(), 1u);
  EXPECT_EQ(d.num_outputs(), 1u);
  EXPECT_EQ(d.output(kD, 0), 13);
  EXPECT_EQ(d.input_labels().front(), "x1");
  EXPECT_EQ(d.index_of("C"), 2u);
}

TEST(ValidateDataset, SingleUnit) {
  const auto d = make_dataset<double>({"solo"}, {{1, 1, 1}}, {{1, 1}});
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d.num_inputs(), 3u);
}

TEST(ValidateDataset, Errors) {
  EXPECT_EQ(code_of([] { make_dataset<double>({"A", "B"}, {{1}, {0}}, {{1}, {1}}); }),
            ErrorCode::kNonpositiveValue);
  EXPECT_EQ(code_of([] { make_dataset<double>({"A"}, {{1}}, {{-2}}); }),
            ErrorCode::kNonpositiveValue);
  EXPECT_EQ(code_of([] { make_dataset<double>({"A", "A"}, {{1}, {2}}, {{1}, {1}}); }),
            ErrorCode::kDuplicateName);
  EXPECT_EQ(code_of([] { make_dataset<double>({}, {}, {}); }), ErrorCode::kEmptyDataset);
  EXPECT_EQ(code_of([] { make_dataset<double>({"A", "B"}, {{1, 2}, {2}}, {{1}, {1}}); }),
            ErrorCode::kRaggedRows);
  EXPECT_EQ(code_of([] { make_dataset<double>({"A", "B"}, {{1}}, {{1}, {1}}); }),
            ErrorCode::kRaggedRows);
}

TEST(RatioTable, ExampleReferenceB) {
  // Frozen from per-component recomputation: x_j / 3 and y_j / 4.
  const auto t = ratio_table(example1<Rational>(), kB);
  EXPECT_EQ(t.alpha, (std::vector<Rational>{q(1, 3), q(1), q(5, 3), q(2)}));
  EXPECT_EQ(t.beta, (std::vector<Rational>{q(1, 2), q(1), q(5, 4), q(13, 4)}));
}

TEST(RatioTable, ExampleReferenceD) {
  const auto t = ratio_table(example1<Rational>(), kD);
  EXPECT_EQ(t.alpha, (std::vector<Rational>{q(1, 6), q(1, 2), q(5, 6), q(1)}));
  EXPECT_EQ(t.beta, (std::vector<Rational>{q(2, 13), q(4, 13), q(5, 13), q(1)}));
}

TEST(RatioTable, SelfRatiosAreOne) {
  const auto d = example1<double>();
  for (std::size_t o = 0; o < d.size(); ++o) {
    const auto t = ratio_table(d, o);
    EXPECT_EQ(t.alpha[o], 1.0);
    EXPECT_EQ(t.beta[o], 1.0);
  }
  EXPECT_EQ(code_of([&] { ratio_table(d, 4); }), ErrorCode::kIndexOutOfRange);
}

TEST(RatioTable, MatchesComponentwiseMaxMin) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto d = oracle::random_dataset(seed, 6, 3, 3);
    for (std::size_t o = 0; o < d.size(); ++o) {
      const auto t = ratio_table(d, o);
      for (std::size_t j = 0; j < d.size(); ++j) {
        bool alpha_attained = false;
        bool beta_attained = false;
        for (std::size_t i = 0; i < 3; ++i) {
          const Rational r = d.input(j, i) / d.input(o, i);
          EXPECT_LE(r, t.alpha[j]);
          alpha_attained = alpha_attained || r == t.alpha[j];
          const Rational s = d.output(j, i) / d.output(o, i);
          EXPECT_GE(s, t.beta[j]);
          beta_attained = beta_attained || s == t.beta[j];
        }
        EXPECT_TRUE(alpha_attained && beta_attained);
        EXPECT_GT(t.alpha[j], 0);
        EXPECT_GT(t.beta[j], 0);
      }
    }
  }
}

// Rescaling an input or output dimension across all units cancels in every ratio.
TEST(RatioTable, UnitsInvariance) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto d = oracle::random_dataset(seed, 5, 2, 2);
    RawTable<Rational> raw;
    raw.names = d.names();
    for (std::size_t j = 0; j < d.size(); ++j) {
      raw.inputs.push_back({d.input(j, 0) * q(7, 3), d.input(j, 1) * q(1, 5)});
      raw.outputs.push_back({d.output(j, 0) * q(11), d.output(j, 1) * q(2, 9)});
    }
    const auto scaled = validate_dataset(std::move(raw));
    for (std::size_t o = 0; o < d.size(); ++o) {
      const auto a = ratio_table(d, o);
      const auto b = ratio_table(scaled, o);
      EXPECT_EQ(a.alpha, b.alpha);
      EXPECT_EQ(a.beta, b.beta);
    }
  }
}

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("13/4"), q(13, 4));
  EXPECT_EQ(parse_rational(" 3.25 "), q(13, 4));
  EXPECT_EQ(parse_rational("1e2"), q(100));
  EXPECT_EQ(parse_rational("2.5E-1"), q(1, 4));
  EXPECT_EQ(parse_rational("-0.5"), q(-1, 2));
  EXPECT_EQ(parse_rational(".5"), q(1, 2));
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "4/", "e5", "1e"}) {
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::kParseError) << bad;
  }
}

TEST(Numeric, ToleranceBoundsAndComparison) {
  EXPECT_EQ(code_of([] { Tolerance(0.0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Tolerance(1e-2); }), ErrorCode::kInvalidArgument);
  const Tolerance tol(1e-9);
  EXPECT_TRUE(equal(1.0, 1.0 + 1e-12, tol));
  EXPECT_TRUE(greater(1.0 + 1e-6, 1.0, tol));
  EXPECT_TRUE(less(q(999999999, 1000000000), q(1), tol));  // exact ignores eps
  EXPECT_EQ(to_string(q(-6, 4)), "-3/2");
}

TEST(Numeric, ExtendedInfinityOrdering) {
  const Tolerance tol;
  const auto inf = Extended<double>::infinity();
  EXPECT_TRUE(inf.is_infinite());
  EXPECT_EQ(inf.compare_to(1e300, tol), std::strong_ordering::greater);
  EXPECT_EQ(Extended<double>::finite(1.0).compare_to(1.0, tol), std::strong_ordering::equal);
}

TEST(Delta, ParseAndRegions) {
  EXPECT_EQ(parse_delta("NIRS"), Delta::kNirs);
  EXPECT_EQ(to_string(Delta::kNdrs), "ndrs");
  EXPECT_EQ(code_of([] { parse_delta("bcc"); }), ErrorCode::kInvalidArgument);
  EXPECT_TRUE(region_of(Delta::kVrs).lower_is_one && region_of(Delta::kVrs).upper_is_one);
  EXPECT_FALSE(region_of(Delta::kCrs).lower_is_one || region_of(Delta::kCrs).upper_is_one);
  EXPECT_EQ(parse_orientation("Output"), Orientation::kOutput);
}

TEST(Dataset, CastPreservesValues) {
  const auto d = make_dataset<Rational>({"p"}, {{q(1, 3)}}, {{q(13, 4)}});
  const auto f = d.cast<double>();
  EXPECT_DOUBLE_EQ(f.input(0, 0), 1.0 / 3.0);
  EXPECT_EQ(f.output(0, 0), 3.25);
  EXPECT_EQ(f.names(), d.names());
}

}  // namespace
}  // namespace fdh
