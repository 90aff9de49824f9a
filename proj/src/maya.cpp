#include "affine_fock/maya.hpp"

#include "affine_fock/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace affine_fock {

HalfInt::HalfInt(int twice_value) : twice(twice_value) {
  if (twice_value % 2 == 0) throw ConstraintError("half-integer must have odd twice-value");
}

HalfInt HalfInt::from_ratio(int num, int den) {
  if (den == 2) return HalfInt(num);
  throw ConstraintError("half-integer must have denominator 2");
}

std::string HalfInt::to_string() const { return std::to_string(twice) + "/2"; }

MayaDiagram MayaDiagram::from_defects(std::vector<int> pb, std::vector<int> ha) {
  for (int h : pb)
    if (h % 2 == 0 || h > 0) throw ConstraintError("particles_below must be negative odd twice-values");
  for (int h : ha)
    if (h % 2 == 0 || h < 0) throw ConstraintError("holes_above must be positive odd twice-values");
  std::sort(pb.begin(), pb.end());
  std::sort(ha.begin(), ha.end());
  if (std::adjacent_find(pb.begin(), pb.end()) != pb.end() ||
      std::adjacent_find(ha.begin(), ha.end()) != ha.end())
    throw ConstraintError("duplicate defect");
  return {std::move(pb), std::move(ha)};
}

std::string MayaDiagram::to_string() const {
  std::ostringstream os;
  os << "{below:";
  for (int h : particles_below) os << " " << h << "/2";
  os << "; above:";
  for (int h : holes_above) os << " " << h << "/2";
  os << "}";
  return os.str();
}

int evaluate(const MayaDiagram& m, int twice) {
  if (twice < 0)
    return std::binary_search(m.particles_below.begin(), m.particles_below.end(), twice) ? 1 : -1;
  return std::binary_search(m.holes_above.begin(), m.holes_above.end(), twice) ? -1 : 1;
}

int charge(const MayaDiagram& m) {
  return static_cast<int>(m.holes_above.size()) - static_cast<int>(m.particles_below.size());
}

int min_defect(const MayaDiagram& m) {
  if (!m.particles_below.empty()) return m.particles_below.front();
  if (!m.holes_above.empty()) return m.holes_above.front();
  return 0;
}

int max_defect(const MayaDiagram& m) {
  if (!m.holes_above.empty()) return m.holes_above.back();
  if (!m.particles_below.empty()) return m.particles_below.back();
  return 0;
}

MayaDiagram shift(const MayaDiagram& m, int c) {
  const int lo = std::min(min_defect(m) - 2 * c, -2 * std::abs(c)) - 1;
  const int hi = std::max(max_defect(m) - 2 * c, 2 * std::abs(c)) + 1;
  return maya_from_rule(lo, hi, [&](int h) { return evaluate(m, h + 2 * c); });
}

MayaDiagram from_partition(const Partition& lambda) {
  const LaurentPoly f = diagonal_char(lambda);
  auto n = [&](int j) { return f.coeff(j); };
  const int lo = -2 * lambda.length() - 3;
  const int hi = 2 * lambda.row(0) + 3;
  return maya_from_rule(lo, hi, [&](int h) {
    const auto d = n((h - 1) / 2) - n((h + 1) / 2);
    if (h < 0) return d == -1 ? 1 : -1;
    return d == 0 ? 1 : -1;
  });
}

MayaDiagram maya_of(int c, const Partition& lambda) { return shift(from_partition(lambda), -c); }

std::pair<int, Partition> to_charge_partition(const MayaDiagram& m) {
  const int c = charge(m);
  const MayaDiagram m0 = shift(m, c);
  // The descending positions X_1 > X_2 > ... with m0 = -1 are the
  // beta-numbers 2(lambda_i - i) + 1.
  const int lo = std::min(min_defect(m0), -1) - 2;
  std::vector<int> parts;
  int i = 1;
  for (int h = std::max(max_defect(m0), 1); h >= lo; h -= 2) {
    if (h % 2 == 0) continue;
    if (evaluate(m0, h) != -1) continue;
    const int part = (h + 2 * i - 1) / 2;
    if (part > 0) parts.push_back(part);
    ++i;
  }
  return {c, Partition(std::move(parts))};
}

std::vector<std::pair<int, NodeKind>> node_patterns(const MayaDiagram& m) {
  std::vector<std::pair<int, NodeKind>> out;
  const int jlo = (std::min(min_defect(m), -1) - 1) / 2 - 1;
  const int jhi = (std::max(max_defect(m), 1) + 1) / 2 + 1;
  for (int j = jlo; j <= jhi; ++j) {
    const int left = evaluate(m, 2 * j - 1);
    const int right = evaluate(m, 2 * j + 1);
    if (left == -1 && right == 1) out.emplace_back(j, NodeKind::Addable);
    if (left == 1 && right == -1) out.emplace_back(j, NodeKind::Removable);
  }
  return out;
}

int eta_left_via_maya(const MayaDiagram& m, int l, int j, int cutoff_twice) {
  require_level(l);
  auto same_class = [&](int h, int ref) { return ((h - ref) % (2 * l)) == 0; };
  int s = 0;
  int start = cutoff_twice % 2 == 0 ? cutoff_twice + 1 : cutoff_twice;
  for (int h = start; h < 2 * j; h += 2) {
    if (evaluate(m, h) != 1) continue;
    if (same_class(h, 2 * j + 1)) ++s;
    if (same_class(h, 2 * j - 1) && h < 2 * j - 1) --s;
  }
  return s;
}

}  // namespace affine_fock
