#pragma once

#include "affine_fock/core_quotient.hpp"
#include "affine_fock/fock.hpp"
#include "affine_fock/report.hpp"

#include <string>
#include <vector>

namespace affine_fock {

// Element of the root lattice Q, identified with integer vectors indexed by
// k = 1/2 .. l-1/2 whose entries sum to zero.
using RootVector = std::vector<int>;

// alpha_i = e_{i-1/2} - e_{i+1/2} for i = 1..l-1.
RootVector simple_root(int i, int l);
// theta = e_{1/2} - e_{l-1/2} = alpha_1 + ... + alpha_{l-1}.
RootVector highest_root(int l);
// e_k - e_{k'} from slot indices (0-based), k < k'.
RootVector positive_root(int k, int k2, int l);
int pairing(const RootVector& a, const RootVector& b);
RootVector operator+(const RootVector& a, const RootVector& b);
RootVector operator-(const RootVector& a);
void require_root_vector(const RootVector& a, int l);

// Bimultiplicative cocycle with eps(alpha_i, alpha_j) = -1 for j in {i, i+1}
// and +1 otherwise. Throws ConstraintError off the root lattice.
int epsilon(const RootVector& a, const RootVector& b);

// [beta] (x) b_{q_{1/2}} (x) ... (x) b_{q_{l-1/2}}.
struct LBLabel {
  RootVector beta;
  PartitionTuple q;
  friend bool operator==(const LBLabel&, const LBLabel&) = default;
  friend bool operator<(const LBLabel& x, const LBLabel& y);
};
using LatticeBosonVector = FockVector<LBLabel>;

int tuple_degree(const PartitionTuple& q);

// p(n) acting on strand slot k alone.
LatticeBosonVector strand_heis(int slot, int n, const LatticeBosonVector& v);
// alpha(n) = sum_k alpha_k p(n)_k.
LatticeBosonVector lattice_heis(const RootVector& alpha, int n, const LatticeBosonVector& v);
// p_i(n) = p(n)_{i-1/2} - p(n)_{i+1/2}, i = 1..l-1.
LatticeBosonVector heis_tensor(int i, int n, const LatticeBosonVector& v);

// Coefficient of z^m in X(alpha, z). Throws WindowOverflow when a result would
// have quotient degree beyond w.max_degree.
LatticeBosonVector vertex_coeff(const RootVector& alpha, int m, const LatticeBosonVector& v,
                                const DegreeWindow& w);

struct AffineGenerator {
  enum class Kind { E, F, H, P, ERoot, FRoot, C, D };
  Kind kind = Kind::H;
  int i = 0;              // Chevalley index, or the strand pair index for P
  int m = 0;              // loop degree for P, ERoot, FRoot
  RootVector alpha;       // positive root for ERoot / FRoot

  bool is_chevalley() const { return kind == Kind::E || kind == Kind::F || kind == Kind::H; }
  std::string to_string() const;
};

// Accepts e_i, f_i, h_i, p_i(m), c and d. Throws ParseError.
AffineGenerator parse_generator(const std::string& text);
// Range checks against l. Throws ConstraintError.
void require_generator(const AffineGenerator& g, int l);

// The vertex-operator action on C[Q] (x) B^{(x)l}.
LatticeBosonVector fk_action(const AffineGenerator& g, const LatticeBosonVector& v, int l,
                             const DegreeWindow& w);

// The Young-diagram action of e_i, f_i, h_i on b_lambda.
BosonVector explicit_action(const AffineGenerator& g, const Partition& lambda, int l);
BosonVector explicit_action(const AffineGenerator& g, const BosonVector& v, int l);

// b_lambda -> [c(lambda)] (x) b_{q(lambda)}, no sign.
LatticeBosonVector transport(const BosonVector& v, int l);
BosonVector transport_inverse(const LatticeBosonVector& v, int l);

// Affine Cartan matrix of type A^{(1)}_{l-1}.
int cartan_entry(int i, int j, int l);

Report verify_intertwining(int l, int D);
Report verify_relations(int l, int D);

}  // namespace affine_fock
