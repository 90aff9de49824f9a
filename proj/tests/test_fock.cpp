#include "affine_fock/conventions.hpp"
#include "affine_fock/errors.hpp"
#include "affine_fock/fock.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace affine_fock;

namespace {

MayaDiagram random_maya(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<int> pb, ha;
  for (int h = -11; h < 0; h += 2)
    if (coin(rng) == 0) pb.push_back(h);
  for (int h = 1; h <= 11; h += 2)
    if (coin(rng) == 0) ha.push_back(h);
  return MayaDiagram::from_defects(pb, ha);
}

BosonVector b(const Partition& p) { return BosonVector::basis(p); }

}  // namespace

TEST(Fock, CentralizerOrder) {
  EXPECT_EQ(centralizer_order(Partition{}), 1);
  EXPECT_EQ(centralizer_order(Partition{3}), 3);
  EXPECT_EQ(centralizer_order(Partition({1, 1})), 2);
  EXPECT_EQ(centralizer_order(Partition({2, 1})), 2);
  EXPECT_EQ(centralizer_order(Partition({2, 2, 1, 1, 1})), 48);
}

TEST(Fock, PsiOnVacuum) {
  const FermionVector vac = FermionVector::basis(MayaDiagram::vacuum());
  const FermionVector out = psi(HalfInt(1), vac);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.coeff(MayaDiagram::from_defects({}, {1})), 1);
  EXPECT_EQ(charge(out.begin()->first), 1);
  EXPECT_TRUE(psi(HalfInt(-1), vac).is_zero());
  EXPECT_TRUE(psi_star(HalfInt(1), vac).is_zero());
  const FermionVector down = psi_star(HalfInt(-1), vac);
  ASSERT_EQ(down.size(), 1u);
  EXPECT_EQ(charge(down.begin()->first), -1);
}

TEST(Fock, CliffordRelations) {
  std::mt19937 rng(99);
  for (int t = 0; t < 60; ++t) {
    const FermionVector v = FermionVector::basis(random_maya(rng));
    for (int j = -9; j <= 9; j += 2)
      for (int k = -9; k <= 9; k += 2) {
        const HalfInt hj(j), hk(k);
        const FermionVector anti = psi(hj, psi_star(hk, v)) + psi_star(hk, psi(hj, v));
        EXPECT_EQ(anti, j == k ? v : FermionVector());
        EXPECT_TRUE((psi(hj, psi(hk, v)) + psi(hk, psi(hj, v))).is_zero());
        EXPECT_TRUE((psi_star(hj, psi_star(hk, v)) + psi_star(hk, psi_star(hj, v))).is_zero());
      }
  }
}

// The below-count sign is another Clifford representation; only the
// boson-fermion comparison can tell the two apart.
TEST(Fock, PsiSignMutationStillAnticommutes) {
  ScopedMutation guard(Mutation::PsiSign);
  const FermionVector v = FermionVector::basis(MayaDiagram::from_defects({-3}, {1, 5}));
  for (int j = -7; j <= 7; j += 2)
    for (int k = -7; k <= 7; k += 2) {
      const FermionVector anti = psi(HalfInt(j), psi_star(HalfInt(k), v)) +
                                 psi_star(HalfInt(k), psi(HalfInt(j), v));
      EXPECT_EQ(anti, j == k ? v : FermionVector());
    }
}

TEST(Fock, MurnaghanNakayama) {
  EXPECT_EQ(heis(-1, b(Partition{})), b(Partition{1}));
  EXPECT_EQ(heis(-2, b(Partition{})), b(Partition{2}) - b(Partition({1, 1})));
  EXPECT_EQ(heis(2, b(Partition{2})), b(Partition{}));
  EXPECT_EQ(heis(2, b(Partition({1, 1}))), Rational(-1) * b(Partition{}));
  EXPECT_EQ(heis(-1, b(Partition{1})), b(Partition{2}) + b(Partition({1, 1})));
  EXPECT_TRUE(heis(3, b(Partition({1, 1}))).is_zero());
  EXPECT_THROW(heis(0, b(Partition{})), ConstraintError);
}

TEST(Fock, HeisenbergCommutators) {
  const auto parts = enumerate_up_to(6);
  for (const auto& lambda : parts)
    for (int m = 1; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n) {
        if (n == 0) continue;
        const BosonVector v = b(lambda);
        const BosonVector comm = heis(m, heis(n, v)) - heis(n, heis(m, v));
        EXPECT_EQ(comm, n == -m ? Rational(m) * v : BosonVector()) << lambda.to_string();
      }
}

TEST(Fock, HeisenbergTransposeSymmetry) {
  // p(n) commutes with transposition up to the sign (-1)^{n-1}.
  for (const auto& lambda : enumerate_up_to(7))
    for (int n : {-3, -2, -1, 1, 2, 3}) {
      BosonVector lhs;
      for (const auto& [mu, s] : heis_basis(n, transpose(lambda))) lhs.add(mu, Rational(s));
      BosonVector rhs;
      for (const auto& [mu, s] : heis_basis(n, lambda))
        rhs.add(transpose(mu), Rational((n % 2 == 0) ? -s : s));
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Fock, GammaCoefficients) {
  const DegreeWindow w{6, 0};
  const BosonVector vac = b(Partition{});
  EXPECT_EQ(gamma_coeff(GammaSign::Plus, false, 0, vac, w), vac);
  EXPECT_EQ(gamma_coeff(GammaSign::Plus, false, 1, vac, w), b(Partition{1}));
  EXPECT_EQ(gamma_coeff(GammaSign::Plus, false, 2, vac, w), b(Partition{2}));
  EXPECT_EQ(gamma_coeff(GammaSign::Plus, true, 2, vac, w), b(Partition({1, 1})));
  EXPECT_EQ(gamma_coeff(GammaSign::Plus, true, 3, vac, w), Rational(-1) * b(Partition({1, 1, 1})));
  EXPECT_EQ(gamma_coeff(GammaSign::Minus, false, 2, b(Partition{2}), w), vac);
  EXPECT_TRUE(gamma_coeff(GammaSign::Minus, false, 2, b(Partition({1, 1})), w).is_zero());
  EXPECT_THROW(gamma_coeff(GammaSign::Plus, false, 7, vac, w), WindowOverflow);
  EXPECT_THROW(gamma_coeff(GammaSign::Plus, false, -1, vac, w), ConstraintError);
}

TEST(Fock, GammaInverseIsInverse) {
  const DegreeWindow w{8, 0};
  for (const auto& lambda : enumerate_up_to(3))
    for (int n = 1; n <= 4; ++n) {
      BosonVector sum;
      for (int a = 0; a <= n; ++a)
        sum += gamma_coeff(GammaSign::Plus, true, n - a,
                           gamma_coeff(GammaSign::Plus, false, a, b(lambda), w), w);
      EXPECT_TRUE(sum.is_zero());
    }
}

TEST(Fock, ShiftAndDegree) {
  const ChargedVector v = ChargedVector::basis(ChargedLabel{2, Partition{1}}, Rational(3));
  EXPECT_EQ(shift_op(v, -3), ChargedVector::basis(ChargedLabel{-1, Partition{1}}, Rational(3)));
  EXPECT_EQ(degree_op(v), ChargedVector::basis(ChargedLabel{2, Partition{1}}, Rational(6)));
  EXPECT_TRUE(degree_op(ChargedVector::basis(ChargedLabel{0, Partition{2}})).is_zero());
}

TEST(Fock, ChargedFermionRoundTrip) {
  for (int c = -3; c <= 3; ++c)
    for (const auto& lambda : enumerate_up_to(6)) {
      const ChargedVector x = ChargedVector::basis(ChargedLabel{c, lambda}, Rational(2, 3));
      EXPECT_EQ(to_charged(to_fermion(x)), x);
    }
}

TEST(Fock, BosonFieldLowestMode) {
  // psi_{1/2} on [0] (x) b_empty is [1] (x) b_empty.
  const DegreeWindow w{4, 2};
  const ChargedVector out = boson_field_coeff(FieldKind::Psi, HalfInt(1), ChargedLabel{0, Partition{}}, w);
  EXPECT_EQ(out, ChargedVector::basis(ChargedLabel{1, Partition{}}));
  const FermionVector direct = psi(HalfInt(1), FermionVector::basis(MayaDiagram::vacuum()));
  EXPECT_EQ(to_charged(direct), out);
}

TEST(Fock, BosonFermionCorrespondence) {
  const Report r = verify_boson_fermion(4, 2);
  EXPECT_TRUE(r.ok()) << r.to_json().dump(2);
  EXPECT_GT(r.checked, 0u);
}

TEST(Fock, BosonFermionDetectsPsiSignMutation) {
  ScopedMutation guard(Mutation::PsiSign);
  EXPECT_FALSE(verify_boson_fermion(3, 1).ok());
}
