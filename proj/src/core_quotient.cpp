#include "affine_fock/core_quotient.hpp"

#include "affine_fock/errors.hpp"

#include <numeric>

namespace affine_fock {

namespace {
void require_strand(int l, HalfInt k) {
  require_level(l);
  if (k.twice < 1 || k.twice > 2 * l - 1) throw ConstraintError("strand index outside 1/2..l-1/2");
}
}  // namespace

void require_core_vector(const CoreVector& c, int l) {
  require_level(l);
  if (static_cast<int>(c.size()) != l) throw ConstraintError("core vector must have l entries");
  if (std::accumulate(c.begin(), c.end(), 0) != 0)
    throw ConstraintError("core vector entries must sum to 0");
}

MayaDiagram strand(const MayaDiagram& m, int l, HalfInt k) {
  require_strand(l, k);
  // Twice-positions: H on the strand sits at l(H - 1) + K on m. Signs agree
  // with the sign of H, so only defects of m in the class K mod 2l matter.
  MayaDiagram out;
  auto pull = [&](int d, std::vector<int>& dst) {
    if ((d - k.twice) % (2 * l) == 0) dst.push_back((d - k.twice) / l + 1);
  };
  for (int d : m.particles_below) pull(d, out.particles_below);
  for (int d : m.holes_above) pull(d, out.holes_above);
  return out;
}

CoreQuotient core_and_quotient(const Partition& lambda, int l) {
  require_level(l);
  const MayaDiagram m = from_partition(lambda);
  CoreQuotient out;
  for (int j = 0; j < l; ++j) {
    auto [c, q] = to_charge_partition(strand(m, l, HalfInt(2 * j + 1)));
    out.c.push_back(c);
    out.q.push_back(std::move(q));
  }
  return out;
}

Partition cq_inverse(const CoreVector& c, const PartitionTuple& q, int l) {
  require_core_vector(c, l);
  if (static_cast<int>(q.size()) != l) throw ConstraintError("quotient must have l components");
  MayaDiagram m;
  for (int j = 0; j < l; ++j) {
    const MayaDiagram s = maya_of(c[j], q[j]);
    const int K = 2 * j + 1;
    for (int d : s.particles_below) m.particles_below.push_back(l * (d - 1) + K);
    for (int d : s.holes_above) m.holes_above.push_back(l * (d - 1) + K);
  }
  m = MayaDiagram::from_defects(std::move(m.particles_below), std::move(m.holes_above));
  auto [charge0, lambda] = to_charge_partition(m);
  if (charge0 != 0) throw ConstraintError("reassembled diagram has nonzero charge");
  return lambda;
}

Partition core_partition(const CoreVector& c, int l) {
  return cq_inverse(c, PartitionTuple(l), l);
}

LaurentPoly quotient_char_rhs(const CoreVector& c, const PartitionTuple& q, int l) {
  require_core_vector(c, l);
  LaurentPoly rhs = diagonal_char(core_partition(c, l));
  for (int j = 0; j < l; ++j) {
    LaurentPoly block;
    for (int e = j + 1 - l; e <= j; ++e) block.add_term(e, 1);
    rhs += (diagonal_char(q[j]).substitute_power(l) * block).shifted(l * c[j]);
  }
  return rhs;
}

bool quotient_char_identity(const Partition& lambda, int l) {
  const CoreQuotient cq = core_and_quotient(lambda, l);
  return diagonal_char(lambda) == quotient_char_rhs(cq.c, cq.q, l);
}

}  // namespace affine_fock
