#pragma once

#include "affine_fock/partitions.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace affine_fock {

// A half-integer stored as twice its value (always odd).
struct HalfInt {
  int twice = 1;
  HalfInt() = default;
  explicit HalfInt(int twice_value);  // throws ConstraintError if even
  static HalfInt from_ratio(int num, int den);
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
  std::string to_string() const;
};

// Maya diagram m: Z+1/2 -> {+1,-1}, m = +1 far right and -1 far left.
// Stored through its two finite defect sets (twice-values, ascending).
struct MayaDiagram {
  std::vector<int> particles_below;  // h < 0 with m(h) = +1
  std::vector<int> holes_above;      // h > 0 with m(h) = -1

  static MayaDiagram vacuum() { return {}; }
  // Validates oddness and signs, sorts, removes nothing.
  static MayaDiagram from_defects(std::vector<int> particles_below, std::vector<int> holes_above);
  friend auto operator<=>(const MayaDiagram&, const MayaDiagram&) = default;
  std::string to_string() const;
};

// Sign at position twice/2.
int evaluate(const MayaDiagram& m, int twice);
inline int evaluate(const MayaDiagram& m, HalfInt h) { return evaluate(m, h.twice); }

// Charge: #holes_above - #particles_below. Under this sign,
// charge(shift(m, c)) = charge(m) - c and F(c, lambda) has charge c.
int charge(const MayaDiagram& m);

// shift(m, c)(h) = m(h + c).
MayaDiagram shift(const MayaDiagram& m, int c);

// m_lambda from the diagonal counts: with d = n_{k-1/2} - n_{k+1/2},
// m(k) = +1 iff d = -1 (k < 0) or d = 0 (k > 0).
MayaDiagram from_partition(const Partition& lambda);

// F(c, lambda) = shift(m_lambda, -c).
MayaDiagram maya_of(int c, const Partition& lambda);

// Inverse of F.
std::pair<int, Partition> to_charge_partition(const MayaDiagram& m);

enum class NodeKind { Addable, Removable };
// Integers j with (m(j-1/2), m(j+1/2)) = (-1,+1) (addable) or (+1,-1) (removable).
std::vector<std::pair<int, NodeKind>> node_patterns(const MayaDiagram& m);

// Builds a diagram from an evaluation rule on [lo, hi] (twice-values);
// positions outside take the default sign.
template <class F>
MayaDiagram maya_from_rule(int lo, int hi, F&& rule) {
  MayaDiagram m;
  if (lo % 2 == 0) ++lo;
  for (int h = lo; h <= hi; h += 2) {
    const int v = rule(h);
    if (h < 0 && v == 1) m.particles_below.push_back(h);
    if (h > 0 && v == -1) m.holes_above.push_back(h);
  }
  return m;
}

// Smallest / largest defect twice-value, or 0 for the vacuum.
int min_defect(const MayaDiagram& m);
int max_defect(const MayaDiagram& m);

// Maya-side count for eta^- at content j:
//   #{h = j+1/2 mod l, h < j, m(h)=+1} - #{h = j-1/2 mod l, h < j-1/2, m(h)=+1},
// scanning only positions above cutoff_twice. Below every defect and below 0
// there are no +1 sites, so any cutoff under min(min_defect(m), 0) agrees.
int eta_left_via_maya(const MayaDiagram& m, int l, int j, int cutoff_twice);

}  // namespace affine_fock
