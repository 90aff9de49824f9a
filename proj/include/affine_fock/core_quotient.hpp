#pragma once

#include "affine_fock/laurent.hpp"
#include "affine_fock/maya.hpp"
#include "affine_fock/partitions.hpp"

#include <vector>

namespace affine_fock {

// Indexed by k = 1/2, 3/2, ..., l-1/2; slot j holds k = j + 1/2.
using CoreVector = std::vector<int>;
using PartitionTuple = std::vector<Partition>;

// m_k(h) = m(l(h - 1/2) + k), for k in {1/2, ..., l - 1/2}.
MayaDiagram strand(const MayaDiagram& m, int l, HalfInt k);

struct CoreQuotient {
  CoreVector c;
  PartitionTuple q;
  friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

// CQ: component k is to_charge_partition(strand(m_lambda, l, k)).
CoreQuotient core_and_quotient(const Partition& lambda, int l);

// Reassembles the strands F(c_k, q_k) position by position.
Partition cq_inverse(const CoreVector& c, const PartitionTuple& q, int l);

// The l-core with core vector c.
Partition core_partition(const CoreVector& c, int l);

// f_core(z) + sum_k z^{l c_k} f_{q_k}(z^l) (z^{k-l+1/2} + ... + z^{k-1/2}).
LaurentPoly quotient_char_rhs(const CoreVector& c, const PartitionTuple& q, int l);

// f_lambda == quotient_char_rhs(CQ(lambda)).
bool quotient_char_identity(const Partition& lambda, int l);

void require_core_vector(const CoreVector& c, int l);

}  // namespace affine_fock
