#pragma once

#include "affine_fock/core_quotient.hpp"
#include "affine_fock/fock.hpp"
#include "affine_fock/laurent.hpp"
#include "affine_fock/rational.hpp"
#include "affine_fock/report.hpp"

#include <utility>
#include <vector>

namespace affine_fock {

// Characters are Laurent polynomials in the equivariant variable t.
using Character = LaurentPoly;

// V at the fixed point J_lambda: the diagonal character of lambda.
Character fixed_point_char(const Partition& lambda);

// Sum over nodes whose hook is divisible by l of t^h + t^{-h}.
Character tangent_char_point(const Partition& lambda, int l);

// ((t + 1/t - 2) V* V + V + V*)_0.
Character tangent_char_formula(const Partition& mu, int l);

// ((t + 1/t - 2) V_mu* V_lambda + V_lambda + V_mu* - 1)_0, where lambda is mu
// plus one i-node. Throws ConstraintError otherwise.
Character normal_char(const Partition& mu, const Partition& lambda, int i, int l);

// Sum_{A in A_{lambda,i}} t^{c_X - c_A} - Sum_{R in R_{mu,i}} t^{c_X - c_R} with
// X = lambda \ mu; equals normal_char - tangent_char_formula(mu).
Character normal_minus_tangent(const Partition& mu, const Partition& lambda, int i, int l);

// The character of the fixed point in the chamber at infinity.
Character infinity_chamber_char(const CoreVector& c, const PartitionTuple& q, int l);

// Dimension vector v with c_k = v_{k-1/2} - v_{k+1/2} and n = v_0 - v C v^t / 2.
// Throws ConstraintError if no non-negative solution exists.
std::vector<int> points_vector(const CoreVector& c, int n, int l);

// Product of all weights of tangent_char_point(lambda, l).
Rational euler_pairing_diag(const Partition& lambda, int l);

// L_lambda: product of (-h) over hooks h divisible by l.
Rational normalization(const Partition& lambda, int l);

// Localization coefficient of xi_mu in e_i xi_lambda, or 0 unless mu is lambda
// minus a removable i-node.
Rational geometric_e(int i, const Partition& lambda, const Partition& mu, int l);

// e_i b_lambda assembled from geometric_e in the basis b = L^{-1} xi.
BosonVector geometric_action_e(int i, const Partition& lambda, int l);

// Hooks divisible by l read off the Maya diagram: pairs (k, k + nl) with
// m(k) = +1, m(k + nl) = -1, as twice-values.
std::vector<std::pair<int, int>> maya_hook_pairs(const Partition& lambda, int l);
// The pair attached to a node; its difference is twice the hook length.
std::pair<int, int> node_to_maya_pair(const Partition& lambda, Node x);

// Parity of eta^+ + eta^- at a removal, against c_{i-1/2} + c_{i+1/2} + 1
// (literal) and the same plus [i = 0] (corrected).
struct ParityCheck {
  bool literal = false;
  bool corrected = false;
};
ParityCheck parity_congruence(const Partition& lambda, Node x, int l);

// Geometric coefficients against the Young-diagram e_i for |lambda| <= D.
Report verify_geometric_match(int l, int D);
// Corrected congruence everywhere; the literal one exactly off i = 0.
Report verify_parity(int l, int D);
// Chamber characters, tangent formulas, hook bijection, points vector.
Report verify_fixed_points(int l, int D);

}  // namespace affine_fock
