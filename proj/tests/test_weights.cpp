#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "hypermat/weights.hpp"

using namespace hypermat;

TEST(Weights, Dominance) {
  EXPECT_TRUE(is_dominant(Weight2{0, 0}));
  EXPECT_TRUE(is_dominant(Weight2{3, 1}));
  EXPECT_FALSE(is_dominant(Weight2{1, 2}));
  EXPECT_FALSE(is_dominant(TripleWeight{{2, 2}, {1, 2}, {0, 0}}));
}

TEST(Weights, Dual) {
  EXPECT_EQ(dual(Weight2{0, 0}), (Weight2{0, 0}));
  EXPECT_EQ(dual(Weight2{3, 1}), (Weight2{-1, -3}));
  EXPECT_EQ(dual(dual(Weight2{5, -2})), (Weight2{5, -2}));
}

TEST(Weights, BottNormalization) {
  auto r = bott_normalize({4, 0});
  EXPECT_EQ(r.sign, 1);
  EXPECT_EQ(r.normalized, (Weight2{4, 0}));
  EXPECT_EQ(bott_normalize({0, 1}).sign, 0);
  // (0,2) + rho = (1,2); sorted (2,1); minus rho gives (1,1), one swap.
  r = bott_normalize({0, 2});
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(r.normalized, (Weight2{1, 1}));
}

TEST(Weights, BottNormalizationProperties) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-40, 40);
  for (int n = 0; n < 500; ++n) {
    const Weight2 w{dist(rng), dist(rng)};
    const auto r = bott_normalize(w);
    if (w.b == w.a + 1) {
      EXPECT_EQ(r.sign, 0);
      continue;
    }
    ASSERT_NE(r.sign, 0);
    EXPECT_TRUE(is_dominant(r.normalized));
    EXPECT_EQ(r.normalized.size(), w.size());
    EXPECT_EQ(r.sign == 1, is_dominant(w));
  }
}

TEST(Weights, Fourier) {
  EXPECT_EQ(fourier(Weight2{0, 0}), (Weight2{4, 4}));
  EXPECT_EQ(fourier(Weight2{3, 3}), (Weight2{1, 1}));
  EXPECT_EQ(fourier(Weight2{2, 2}), (Weight2{2, 2}));
  EXPECT_EQ(fourier(TripleWeight{{3, 1}, {2, 2}, {0, 0}}), (TripleWeight{{3, 1}, {2, 2}, {4, 4}}));
}

TEST(Weights, FourierIsAnInvolutionPreservingDominance) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> dist(-30, 30);
  for (int n = 0; n < 500; ++n) {
    TripleWeight w{{dist(rng), dist(rng)}, {dist(rng), dist(rng)}, {dist(rng), dist(rng)}};
    EXPECT_EQ(fourier(fourier(w)), w);
    EXPECT_EQ(is_dominant(fourier(w)), is_dominant(w));
  }
}

TEST(Weights, OverflowThrows) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(checked_add(big, 1), std::overflow_error);
  EXPECT_THROW(checked_mul(big, 2), std::overflow_error);
  EXPECT_THROW(checked_neg(std::numeric_limits<std::int64_t>::min()), std::overflow_error);
  EXPECT_THROW((Weight2{big, 0}.shifted(1)), std::overflow_error);
}

TEST(Weights, Formatting) {
  EXPECT_EQ(to_string(TripleWeight{{3, 1}, {2, 2}, {2, 2}}), "[[3,1],[2,2],[2,2]]");
  EXPECT_EQ((TripleWeight{{3, -1}, {2, 2}, {-7, 0}}).max_abs_entry(), 7);
}
