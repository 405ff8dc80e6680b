#include <gtest/gtest.h>

#include "fdh/efficiency.hpp"
#include "fdh/oracle.hpp"
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

TEST(Theta, ExampleCrsScores) {
  const auto d = example1<Rational>();
  const Rational expected[] = {q(12, 13), q(8, 13), q(6, 13), q(1)};
  for (std::size_t o = 0; o < 4; ++o) {
    const auto s = theta(d, Delta::kCrs, o);
    EXPECT_EQ(s.value, expected[o]) << o;
    EXPECT_EQ(s.witness, kD);
    EXPECT_EQ(s.value, oracle::oracle_theta(d, Delta::kCrs, o).value);
  }
}

TEST(Theta, ExampleOtherRegimes) {
  const auto d = example1<Rational>();
  for (std::size_t o = 0; o < 4; ++o) EXPECT_EQ(theta(d, Delta::kVrs, o).value, 1);
  // Frozen from enumeration over units and interval ends.
  EXPECT_EQ(theta(d, Delta::kNirs, kA).value, q(12, 13));
  EXPECT_EQ(theta(d, Delta::kNdrs, kA).value, 1);
  EXPECT_EQ(theta(d, Delta::kNirs, kB).value, q(8, 13));
  EXPECT_EQ(theta(d, Delta::kNdrs, kB).value, q(2, 3));
  EXPECT_EQ(theta(d, Delta::kNdrs, kC).value, q(1, 2));
  EXPECT_EQ(theta(d, Delta::kNirs, kD).value, 1);
  EXPECT_EQ(theta(d, Delta::kNdrs, kD).value, 1);
  for (Delta delta : kAllDeltas) {
    for (std::size_t o = 0; o < 4; ++o) {
      EXPECT_EQ(theta(d, delta, o).value, oracle::oracle_theta(d, delta, o).value);
      EXPECT_EQ(phi(d, delta, o).value, oracle::oracle_phi(d, delta, o).value);
    }
  }
}

TEST(Phi, ExampleScores) {
  const auto d = example1<Rational>();
  EXPECT_EQ(phi(d, Delta::kCrs, kA).value, q(13, 12));
  EXPECT_EQ(phi(d, Delta::kCrs, kC).value, q(13, 6));
  EXPECT_EQ(phi(d, Delta::kVrs, kB).value, 1);
  EXPECT_EQ(phi(d, Delta::kNdrs, kB).value, q(3, 2));
  EXPECT_EQ(score(d, Delta::kCrs, Orientation::kOutput, kB).value, q(13, 8));
}

TEST(Scores, SingleUnitIsEfficientEverywhere) {
  const auto d = make_dataset<Rational>({"only"}, {{q(7, 2), 2}}, {{9}});
  for (Delta delta : kAllDeltas) {
    EXPECT_EQ(theta(d, delta, 0).value, 1);
    EXPECT_EQ(phi(d, delta, 0).value, 1);
    EXPECT_EQ(theta(d, delta, 0).witness, 0u);
  }
  EXPECT_TRUE(is_mpss(d, 0));
}

TEST(Scores, Mpss) {
  const auto d = example1<double>();
  EXPECT_FALSE(is_mpss(d, kA));
  EXPECT_FALSE(is_mpss(d, kB));
  EXPECT_FALSE(is_mpss(d, kC));
  EXPECT_TRUE(is_mpss(d, kD));
}

TEST(Scores, IndexOutOfRange) {
  const auto d = example1<double>();
  EXPECT_EQ(code_of([&] { theta(d, Delta::kVrs, 9); }), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code_of([&] { phi(d, Delta::kCrs, 4); }), ErrorCode::kIndexOutOfRange);
}

TEST(Scores, TiesResolveToLowestIndex) {
  const auto d = make_dataset<Rational>({"P", "Q", "R"}, {{2}, {1}, {1}}, {{1}, {1}, {1}});
  EXPECT_EQ(theta(d, Delta::kVrs, 0).value, q(1, 2));
  EXPECT_EQ(theta(d, Delta::kVrs, 0).witness, 1u);
}

TEST(Scores, MatchEnumerationOnRandomData) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = oracle::random_dataset(seed);
    for (std::size_t o = 0; o < d.size(); ++o) {
      for (Delta delta : kAllDeltas) {
        ASSERT_EQ(theta(d, delta, o).value, oracle::oracle_theta(d, delta, o).value)
            << "seed " << seed << " unit " << o << " " << to_string(delta);
        ASSERT_EQ(phi(d, delta, o).value, oracle::oracle_phi(d, delta, o).value)
            << "seed " << seed << " unit " << o << " " << to_string(delta);
      }
    }
  }
}

bool in_region(Delta delta, const Rational& v) {
  const DeltaRegion r = region_of(delta);
  return v > 0 && (!r.lower_is_one || v >= 1) && (!r.upper_is_one || v <= 1);
}

TEST(Scores, StructuralProperties) {
  for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
    const auto d = oracle::random_dataset(seed);
    for (std::size_t o = 0; o < d.size(); ++o) {
      const auto s = all_scores(d, o);
      const auto in = [&](Delta delta) { return s.input(delta).value; };
      const auto out = [&](Delta delta) { return s.output(delta).value; };
      EXPECT_GT(in(Delta::kCrs), 0);
      EXPECT_LE(in(Delta::kVrs), 1);
      EXPECT_GE(out(Delta::kVrs), 1);
      EXPECT_LE(in(Delta::kCrs), in(Delta::kNirs));
      EXPECT_LE(in(Delta::kCrs), in(Delta::kNdrs));
      EXPECT_LE(in(Delta::kNirs), in(Delta::kVrs));
      EXPECT_LE(in(Delta::kNdrs), in(Delta::kVrs));
      EXPECT_GE(out(Delta::kCrs), out(Delta::kNirs));
      EXPECT_GE(out(Delta::kCrs), out(Delta::kNdrs));
      EXPECT_GE(out(Delta::kNirs), out(Delta::kVrs));
      EXPECT_GE(out(Delta::kNdrs), out(Delta::kVrs));
      EXPECT_EQ(in(Delta::kCrs) * out(Delta::kCrs), 1);

      // The witness, scaled by its delta, reaches the projected point.
      for (Delta delta : kAllDeltas) {
        const auto& t = s.input(delta);
        EXPECT_TRUE(in_region(delta, t.witness_delta));
        for (std::size_t i = 0; i < d.num_inputs(); ++i) {
          EXPECT_LE(t.witness_delta * d.input(t.witness, i), t.value * d.input(o, i));
        }
        for (std::size_t r = 0; r < d.num_outputs(); ++r) {
          EXPECT_GE(t.witness_delta * d.output(t.witness, r), d.output(o, r));
        }
        const auto& f = s.output(delta);
        EXPECT_TRUE(in_region(delta, f.witness_delta));
        for (std::size_t i = 0; i < d.num_inputs(); ++i) {
          EXPECT_LE(f.witness_delta * d.input(f.witness, i), d.input(o, i));
        }
        for (std::size_t r = 0; r < d.num_outputs(); ++r) {
          EXPECT_GE(f.witness_delta * d.output(f.witness, r), f.value * d.output(o, r));
        }
      }
    }
  }
}

TEST(Scores, FloatingPathAgreesWithExact) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto exact = oracle::random_dataset(seed);
    const auto fast = exact.cast<double>();
    for (std::size_t o = 0; o < exact.size(); ++o) {
      for (Delta delta : kAllDeltas) {
        EXPECT_NEAR(theta(fast, delta, o).value, to_double(theta(exact, delta, o).value), 1e-12);
        EXPECT_NEAR(phi(fast, delta, o).value, to_double(phi(exact, delta, o).value), 1e-11);
      }
    }
  }
}

}  // namespace
}  // namespace fdh
