#include "barylab/measure.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace barylab;
using barylab::testing::q;
using barylab::testing::vec;

TEST(Barycenter, Examples) {
  EXPECT_EQ(barycenter(DiscreteMeasure::dirac(vec({q(2, 3), -1}))), vec({q(2, 3), -1}));
  EXPECT_EQ(barycenter(DiscreteMeasure({vec({0}), vec({1})}, {q(1, 2), q(1, 2)})), vec({q(1, 2)}));
  EXPECT_EQ(barycenter(DiscreteMeasure({vec({1}), vec({q(1, 6)})}, {q(1, 5), q(4, 5)})), vec({q(1, 3)}));
}

TEST(Measure, InvariantsAreEnforced) {
  EXPECT_THROW(DiscreteMeasure({}, {}), InputError);
  EXPECT_THROW(DiscreteMeasure({vec({0})}, {q(1, 2)}), InputError);
  EXPECT_THROW(DiscreteMeasure({vec({0}), vec({1})}, {Rational(1), Rational(0)}), InputError);
  EXPECT_THROW(DiscreteMeasure({vec({0}), vec({1})}, {Rational(2), Rational(-1)}), InputError);
  EXPECT_THROW(DiscreteMeasure({vec({0}), vec({0})}, {q(1, 2), q(1, 2)}), InputError);
  EXPECT_THROW(DiscreteMeasure({vec({0}), vec({0, 1})}, {q(1, 2), q(1, 2)}), InputError);
  EXPECT_THROW(DiscreteMeasure({vec({0})}, {Rational(1), Rational(0)}), InputError);
}

TEST(MergeAndNormalize, MergesDuplicates) {
  const DiscreteMeasure mu = merge_and_normalize({vec({1}), vec({1}), vec({2})}, {q(1, 4), q(1, 4), q(1, 2)});
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_EQ(mu.atoms()[0], vec({1}));
  EXPECT_EQ(mu.weights()[0], q(1, 2));
  EXPECT_EQ(mu.weights()[1], q(1, 2));
}

TEST(MergeAndNormalize, IdempotentOnNormalizedInput) {
  const DiscreteMeasure mu({vec({0, 1}), vec({3, 1}), vec({q(1, 2), 0})}, {q(1, 6), q(1, 3), q(1, 2)});
  const DiscreteMeasure again = merge_and_normalize(mu);
  EXPECT_EQ(again.atoms(), mu.atoms());
  EXPECT_EQ(again.weights(), mu.weights());
}

TEST(MergeAndNormalize, Rescales) {
  const DiscreteMeasure mu = merge_and_normalize({vec({0}), vec({1})}, {q(1, 3), q(1, 3)});
  EXPECT_EQ(mu.weights(), (RationalVector{q(1, 2), q(1, 2)}));
}

TEST(MergeAndNormalize, DropsZeroWeightsAndRejectsBadInput) {
  const DiscreteMeasure mu = merge_and_normalize({vec({0}), vec({1})}, {Rational(0), Rational(5)});
  EXPECT_EQ(mu.size(), 1u);
  EXPECT_THROW(merge_and_normalize({vec({0})}, {Rational(0)}), InputError);
  EXPECT_THROW(merge_and_normalize({vec({0})}, {Rational(-1)}), InputError);
  EXPECT_THROW(merge_and_normalize({vec({0})}, {}), InputError);
}

TEST(MergeAndNormalize, PreservesBarycenterOfRawData) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coord(-3, 3), weight(1, 9), count(1, 12);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RationalVector> atoms;
    RationalVector weights;
    RationalVector raw_sum = zeros(2);
    Rational total = 0;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      atoms.push_back(vec({coord(rng), coord(rng)}));
      weights.push_back(weight(rng));
      for (std::size_t c = 0; c < 2; ++c) raw_sum[c] += weights.back() * atoms.back()[c];
      total += weights.back();
    }
    for (auto& c : raw_sum) c /= total;
    EXPECT_EQ(barycenter(merge_and_normalize(atoms, weights)), raw_sum);
  }
}

TEST(Sample, DiracGivesCopies) {
  const auto xs = sample(DiscreteMeasure::dirac(vec({q(1, 3)})), 12345, 5);
  ASSERT_EQ(xs.size(), 5u);
  for (const auto& x : xs) EXPECT_EQ(x, vec({q(1, 3)}));
}

TEST(Sample, FairCoinFrequency) {
  const DiscreteMeasure mu({vec({0}), vec({1})}, {q(1, 2), q(1, 2)});
  const auto xs = sample(mu, 7, 100000);
  std::size_t ones = 0;
  for (const auto& x : xs) ones += x[0] == 1;
  EXPECT_NEAR(static_cast<double>(ones) / 1e5, 0.5, 0.01);
}

TEST(Sample, DeterministicPerSeed) {
  const DiscreteMeasure mu({vec({0}), vec({1}), vec({2})}, {q(1, 6), q(1, 3), q(1, 2)});
  EXPECT_EQ(sample(mu, 42, 1000), sample(mu, 42, 1000));
  EXPECT_NE(sample(mu, 42, 1000), sample(mu, 43, 1000));
}

TEST(Sample, MeanWithinFourSigma) {
  const DiscreteMeasure mu({vec({0}), vec({1}), vec({4})}, {q(1, 2), q(1, 4), q(1, 4)});
  const std::size_t n = 100000;
  double sum = 0;
  for (const auto& x : sample(mu, 1, n)) sum += to_double(x[0]);
  // mean 5/4, second moment 17/4, variance 17/4 - 25/16 = 43/16
  const double sigma = std::sqrt(43.0 / 16.0 / static_cast<double>(n));
  EXPECT_NEAR(sum / static_cast<double>(n), 1.25, 4 * sigma);
}
