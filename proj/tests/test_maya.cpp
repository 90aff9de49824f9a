#include "affine_fock/errors.hpp"
#include "affine_fock/maya.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace affine_fock;

namespace {
MayaDiagram random_maya(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<int> pb, ha;
  for (int h = -13; h < 0; h += 2)
    if (coin(rng) == 0) pb.push_back(h);
  for (int h = 1; h <= 13; h += 2)
    if (coin(rng) == 0) ha.push_back(h);
  return MayaDiagram::from_defects(pb, ha);
}
}  // namespace

TEST(Maya, HalfIntValidation) {
  EXPECT_THROW(HalfInt(2), ConstraintError);
  EXPECT_EQ(HalfInt(-3).to_string(), "-3/2");
  EXPECT_THROW(MayaDiagram::from_defects({1}, {}), ConstraintError);
  EXPECT_THROW(MayaDiagram::from_defects({}, {-1}), ConstraintError);
  EXPECT_THROW(MayaDiagram::from_defects({-1, -1}, {}), ConstraintError);
}

TEST(Maya, Evaluate) {
  EXPECT_EQ(evaluate(MayaDiagram::vacuum(), HalfInt(7)), 1);
  EXPECT_EQ(evaluate(MayaDiagram::vacuum(), HalfInt(-1)), -1);
  const auto m = MayaDiagram::from_defects({-1}, {1});
  EXPECT_EQ(evaluate(m, HalfInt(-1)), 1);
  EXPECT_EQ(evaluate(m, HalfInt(1)), -1);
}

// Charge counts holes above zero minus particles below zero.
TEST(Maya, Charge) {
  EXPECT_EQ(charge(MayaDiagram::vacuum()), 0);
  EXPECT_EQ(charge(MayaDiagram::from_defects({-1}, {})), -1);
  EXPECT_EQ(charge(MayaDiagram::from_defects({-1, -3}, {5})), -1);
  EXPECT_EQ(charge(MayaDiagram::from_defects({}, {1, 3})), 2);
}

TEST(Maya, ShiftLaws) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> cdist(-5, 5);
  EXPECT_EQ(shift(MayaDiagram::vacuum(), 0), MayaDiagram::vacuum());
  for (int t = 0; t < 200; ++t) {
    const MayaDiagram m = random_maya(rng);
    const int a = cdist(rng), b = cdist(rng);
    EXPECT_EQ(charge(shift(m, a)), charge(m) - a);
    EXPECT_EQ(shift(shift(m, a), b), shift(m, a + b));
    for (int h = -21; h <= 21; h += 2) EXPECT_EQ(evaluate(shift(m, a), h), evaluate(m, h + 2 * a));
  }
}

TEST(Maya, FromPartition) {
  EXPECT_EQ(from_partition(Partition{}), MayaDiagram::vacuum());
  EXPECT_EQ(from_partition(Partition{1}), MayaDiagram::from_defects({-1}, {1}));
  for (const auto& lambda : enumerate_up_to(10)) EXPECT_EQ(charge(from_partition(lambda)), 0);
}

TEST(Maya, ChargedBijection) {
  EXPECT_EQ(to_charge_partition(MayaDiagram::vacuum()), std::make_pair(0, Partition{}));
  EXPECT_EQ(to_charge_partition(MayaDiagram::from_defects({-1}, {1})), std::make_pair(0, Partition{1}));
  for (int c = -4; c <= 4; ++c)
    for (const auto& lambda : enumerate_up_to(8)) {
      const MayaDiagram m = maya_of(c, lambda);
      EXPECT_EQ(charge(m), c);
      EXPECT_EQ(to_charge_partition(m), std::make_pair(c, lambda));
    }
}

TEST(Maya, NodePatterns) {
  using NK = NodeKind;
  EXPECT_EQ(node_patterns(MayaDiagram::vacuum()), (std::vector<std::pair<int, NK>>{{0, NK::Addable}}));
  EXPECT_EQ(node_patterns(from_partition(Partition{1})),
            (std::vector<std::pair<int, NK>>{{-1, NK::Addable}, {0, NK::Removable}, {1, NK::Addable}}));
  for (const auto& lambda : enumerate_up_to(10)) {
    std::vector<std::pair<int, NK>> expected;
    for (const Node& x : addable_nodes(lambda)) expected.emplace_back(content(x), NK::Addable);
    for (const Node& x : removable_nodes(lambda)) expected.emplace_back(content(x), NK::Removable);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(node_patterns(from_partition(lambda)), expected) << lambda.to_string();
  }
}

TEST(Maya, EtaLeftFromMaya) {
  for (int l = 2; l <= 4; ++l)
    for (const auto& lambda : enumerate_up_to(8)) {
      const MayaDiagram m = from_partition(lambda);
      for (const auto& pool : {addable_nodes(lambda), removable_nodes(lambda)})
        for (const Node& x : pool) {
          const int i = residue(content(x), l);
          const int expected = eta(lambda, l, i, x, Side::Left);
          const int cut = std::min(min_defect(m), 0) - 1;
          EXPECT_EQ(eta_left_via_maya(m, l, content(x), cut), expected);
          EXPECT_EQ(eta_left_via_maya(m, l, content(x), cut - 6 * l - 1), expected);
        }
    }
}
