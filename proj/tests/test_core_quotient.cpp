#include "affine_fock/core_quotient.hpp"
#include "affine_fock/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace affine_fock;

TEST(CoreQuotient, StrandOfVacuum) {
  for (int l = 2; l <= 5; ++l)
    for (int j = 0; j < l; ++j) EXPECT_EQ(strand(MayaDiagram::vacuum(), l, HalfInt(2 * j + 1)), MayaDiagram::vacuum());
}

TEST(CoreQuotient, StrandChargesAddUp) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> pb, ha;
    for (int h = -25; h < 0; h += 2)
      if (coin(rng) == 0) pb.push_back(h);
    for (int h = 1; h <= 25; h += 2)
      if (coin(rng) == 0) ha.push_back(h);
    const MayaDiagram m = MayaDiagram::from_defects(pb, ha);
    const int l = 2 + t % 4;
    int sum = 0;
    for (int j = 0; j < l; ++j) sum += charge(strand(m, l, HalfInt(2 * j + 1)));
    EXPECT_EQ(sum, charge(m));
  }
}

TEST(CoreQuotient, SingleBox) {
  const MayaDiagram m = from_partition(Partition{1});
  EXPECT_EQ(charge(strand(m, 2, HalfInt(1))), 1);
  EXPECT_EQ(charge(strand(m, 2, HalfInt(3))), -1);
  const CoreQuotient cq = core_and_quotient(Partition{1}, 2);
  EXPECT_EQ(cq.c, (CoreVector{1, -1}));
  EXPECT_EQ(cq.q, (PartitionTuple{Partition{}, Partition{}}));
  EXPECT_EQ(cq_inverse({1, -1}, {Partition{}, Partition{}}, 2), Partition{1});
  EXPECT_EQ(core_partition({1, -1}, 2), Partition{1});
}

TEST(CoreQuotient, Empty) {
  for (int l = 2; l <= 5; ++l) {
    const CoreQuotient cq = core_and_quotient(Partition{}, l);
    EXPECT_EQ(cq.c, CoreVector(l, 0));
    EXPECT_EQ(cq.q, PartitionTuple(l));
    EXPECT_EQ(cq_inverse(CoreVector(l, 0), PartitionTuple(l), l), Partition{});
    EXPECT_EQ(core_partition(CoreVector(l, 0), l), Partition{});
  }
}

TEST(CoreQuotient, DominoQuotientStrand) {
  // (1,1) at l = 2 is a vertical domino living on strand 1/2; (2) lives on strand 3/2.
  const CoreQuotient cq = core_and_quotient(Partition({1, 1}), 2);
  EXPECT_EQ(cq.c, (CoreVector{0, 0}));
  EXPECT_EQ(cq.q, (PartitionTuple{Partition{1}, Partition{}}));
  LaurentPoly expected;
  expected.add_term(-1, 1);
  expected.add_term(0, 1);
  EXPECT_EQ(quotient_char_rhs(cq.c, cq.q, 2), expected);
  EXPECT_EQ(core_and_quotient(Partition{2}, 2).q, (PartitionTuple{Partition{}, Partition{1}}));
}

TEST(CoreQuotient, RoundTripSizeLawAndResidueCounts) {
  for (int l = 2; l <= 5; ++l)
    for (const auto& lambda : enumerate_up_to(12)) {
      const CoreQuotient cq = core_and_quotient(lambda, l);
      EXPECT_EQ(cq_inverse(cq.c, cq.q, l), lambda);
      int qs = 0;
      for (const auto& p : cq.q) qs += p.size();
      EXPECT_EQ(lambda.size(), core_partition(cq.c, l).size() + l * qs);
      const auto v = residue_counts(lambda, l);
      for (int j = 0; j < l; ++j) EXPECT_EQ(cq.c[j], v[j] - v[(j + 1) % l]);
      EXPECT_TRUE(quotient_char_identity(lambda, l));
    }
}

TEST(CoreQuotient, CoresHaveEmptyQuotient) {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const CoreVector c{a, b, -a - b};
      const CoreQuotient cq = core_and_quotient(core_partition(c, 3), 3);
      EXPECT_EQ(cq.c, c);
      EXPECT_EQ(cq.q, PartitionTuple(3));
    }
}

TEST(CoreQuotient, Guards) {
  EXPECT_THROW(cq_inverse({1, 0}, {Partition{}, Partition{}}, 2), ConstraintError);
  EXPECT_THROW(cq_inverse({0, 0, 0}, {Partition{}, Partition{}}, 3), ConstraintError);
  EXPECT_THROW(core_and_quotient(Partition{1}, 1), ConstraintError);
  EXPECT_THROW(strand(MayaDiagram::vacuum(), 2, HalfInt(5)), ConstraintError);
}
