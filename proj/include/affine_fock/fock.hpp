#pragma once

#include "affine_fock/fock_vector.hpp"
#include "affine_fock/maya.hpp"
#include "affine_fock/partitions.hpp"
#include "affine_fock/report.hpp"

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace affine_fock {

// [c] (x) b_lambda in the charged bosonic space C[Z] (x) B.
struct ChargedLabel {
  int c = 0;
  Partition lambda;
  friend bool operator==(const ChargedLabel&, const ChargedLabel&) = default;
  friend bool operator<(const ChargedLabel& x, const ChargedLabel& y) {
    if (x.c != y.c) return x.c < y.c;
    return x.lambda < y.lambda;
  }
};

using BosonVector = FockVector<Partition>;
using FermionVector = FockVector<MayaDiagram>;
using ChargedVector = FockVector<ChargedLabel>;

// Truncation bound for degree-raising operators.
struct DegreeWindow {
  int max_degree = 0;
  int charge_bound = 0;
};

// z_rho = prod_i i^{m_i} m_i!, the centralizer order of cycle type rho.
BigInt centralizer_order(const Partition& rho);

// Largest |lambda| occurring in v, or -1 for the zero vector.
int max_degree(const BosonVector& v);

// Clifford generators on a single diagram. The sign is
// (-1)^{#{h > k : m(h) = -1}}, read before the operator acts.
std::optional<std::pair<int, MayaDiagram>> psi_basis(HalfInt k, const MayaDiagram& m);
std::optional<std::pair<int, MayaDiagram>> psi_star_basis(HalfInt k, const MayaDiagram& m);
FermionVector psi(HalfInt k, const FermionVector& v);
FermionVector psi_star(HalfInt k, const FermionVector& v);

// p(n) on b_lambda by the Murnaghan-Nakayama rule: n < 0 adds border strips of
// size |n| with sign (-1)^{height-1}, n > 0 removes them. Cached per (n, lambda).
const std::vector<std::pair<Partition, int>>& heis_basis(int n, const Partition& lambda);
BosonVector heis(int n, const BosonVector& v);

enum class GammaSign { Plus, Minus };

// Coefficient of z^{+d} in Gamma^+(z) = exp(sum z^m/m p(-m)) or of z^{-d} in
// Gamma^-(z) = exp(sum z^{-m}/m p(m)); inverse selects the exponential of the
// negated generator. Gamma^+ throws WindowOverflow past w.max_degree.
BosonVector gamma_coeff(GammaSign sign, bool inverse, int d, const BosonVector& v,
                        const DegreeWindow& w);

enum class FieldKind { Psi, PsiStar };
FermionVector fermion_field_coeff(FieldKind kind, HalfInt j, const FermionVector& v);

ChargedVector shift_op(const ChargedVector& v, int step);
ChargedVector degree_op(const ChargedVector& v);

// F: Maya diagrams <-> charged partitions, extended linearly.
ChargedVector to_charged(const FermionVector& v);
FermionVector to_fermion(const ChargedVector& v);

// Right-hand sides of the boson-fermion identities on [c] (x) b_lambda:
// the coefficient of z^{j-1/2} in Gamma^+ Gamma^-^{-1} e^K z^D (Psi) and of
// z^{-j-1/2} in Gamma^+^{-1} Gamma^- e^{-K} z^{-D} (Psi*).
ChargedVector boson_field_coeff(FieldKind kind, HalfInt j, const ChargedLabel& x,
                                const DegreeWindow& w);

// Compares psi_j / psi*_j with the bosonic expansion on every [c] (x) b_lambda,
// |c| <= C, |lambda| <= D, for all modes whose image lies in degree <= D (plus
// the first mode below, where both sides vanish).
Report verify_boson_fermion(int D, int C);

}  // namespace affine_fock
