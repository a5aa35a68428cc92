#include <gtest/gtest.h>

#include <random>

#include "hypermat/orbits.hpp"
#include "oracles.hpp"

using namespace hypermat;

namespace {

using T = Tensor222;

}  // namespace

TEST(Hyperdeterminant, Examples) {
  const T generic = T::basis(1, 1, 1) + T::basis(2, 2, 2);
  EXPECT_EQ(hyperdet(generic), 1);
  EXPECT_EQ(oracle::discriminant_hyperdet(generic), 1);
  EXPECT_EQ(hyperdet(T::basis(1, 1, 1) + T::basis(1, 2, 2) + T::basis(2, 1, 2)), 0);
  EXPECT_EQ(hyperdet(T{}), 0);
}

TEST(Hyperdeterminant, AgreesWithSliceDiscriminant) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 300; ++n) {
    const T t = random_tensor(rng, 5);
    ASSERT_EQ(hyperdet(t), oracle::discriminant_hyperdet(t)) << to_string(t);
  }
}

TEST(Hyperdeterminant, TransformsByDeterminantSquared) {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 100; ++n) {
    const T t = random_tensor(rng);
    const GroupElement g = random_group_element(rng);
    const mpq_class d = g.x.det() * g.y.det() * g.z.det();
    EXPECT_EQ(hyperdet(act(g, t)), d * d * hyperdet(t));
  }
}

TEST(Flattenings, Examples) {
  EXPECT_EQ(flattening_ranks(T::basis(1, 1, 1)), (FlatteningRanks{1, 1, 1}));
  EXPECT_EQ(flattening_ranks(T::basis(1, 1, 1) + T::basis(1, 2, 2)), (FlatteningRanks{1, 2, 2}));
  EXPECT_EQ(flattening_ranks(T::basis(1, 1, 1) + T::basis(2, 2, 2)), (FlatteningRanks{2, 2, 2}));
}

TEST(Flattenings, AgreeWithMinors) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 7);
  for (int n = 0; n < 300; ++n) {
    T t = random_tensor(rng, 2);
    // zero out a few entries so low ranks occur
    for (int z = pick(rng) % 6; z > 0; --z) {
      const int k = pick(rng);
      t.at(k >> 2, (k >> 1) & 1, k & 1) = 0;
    }
    const auto r = flattening_ranks(t);
    EXPECT_EQ(r.a, oracle::flattening_rank_by_minors(t, 0)) << to_string(t);
    EXPECT_EQ(r.b, oracle::flattening_rank_by_minors(t, 1)) << to_string(t);
    EXPECT_EQ(r.c, oracle::flattening_rank_by_minors(t, 2)) << to_string(t);
  }
}

TEST(Classification, Representatives) {
  for (OrbitId z : kAllOrbits) {
    EXPECT_EQ(classify_orbit(representative(z)), z) << name(z);
    EXPECT_EQ(orbit_dim(representative(z)), orbit_dim(z)) << name(z);
  }
  EXPECT_EQ(classify_orbit(T{}), OrbitId::O0);
  EXPECT_EQ(orbit_dim(T{}), 0);
}

TEST(Classification, NonzeroHyperdeterminantMeansDenseOrbit) {
  std::mt19937_64 rng(8);
  int dense = 0;
  for (int n = 0; n < 200; ++n) {
    const T t = random_tensor(rng);
    if (hyperdet(t) == 0) continue;
    ++dense;
    EXPECT_EQ(classify_orbit(t), OrbitId::O6) << to_string(t);
    EXPECT_EQ(orbit_dim(t), 8);
  }
  EXPECT_GT(dense, 150);
}

TEST(Classification, ConstantOnOrbits) {
  std::mt19937_64 rng(9);
  for (OrbitId z : kAllOrbits)
    for (int n = 0; n < 30; ++n) {
      const auto g = random_group_element(rng);
      const T t = act(g, representative(z));
      EXPECT_EQ(classify_orbit(t), z) << to_string(t);
      EXPECT_EQ(orbit_dim(t), orbit_dim(z));
    }
}

TEST(Action, OnePassMatchesFactorwise) {
  std::mt19937_64 rng(10);
  for (int n = 0; n < 100; ++n) {
    const auto g = random_group_element(rng), h = random_group_element(rng);
    const T t = random_tensor(rng);
    EXPECT_EQ(act(g, t), act_factorwise(g, t));
    EXPECT_EQ(act(g * h, t), act(g, act(h, t)));
    EXPECT_EQ(act(GroupElement::identity(), t), t);
  }
}

TEST(Isotropy, WorkedSamples) {
  const T v6 = representative(OrbitId::O6);
  const GroupElement diag{{{2, 0, 0, 1}}, {{3, 0, 0, 1}}, {{mpq_class(1, 6), 0, 0, 1}}};
  EXPECT_EQ(act(diag, v6), v6);
  const GroupElement anti{{{0, 2, 5, 0}}, {{0, 3, 1, 0}}, {{0, mpq_class(1, 6), mpq_class(1, 5), 0}}};
  EXPECT_EQ(act(anti, v6), v6);
  const GroupElement broken{{{2, 0, 0, 1}}, {{3, 0, 0, 1}}, {{1, 0, 0, 1}}};
  EXPECT_NE(act(broken, v6), v6);
}

TEST(Isotropy, SpotChecksPass) {
  const auto r = isotropy_spot_checks(1729, 20);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Geometry, ChecksPass) {
  const auto r = geometry_checks(1729, 100);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}
