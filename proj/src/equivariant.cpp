#include "affine_fock/equivariant.hpp"

#include "affine_fock/conventions.hpp"
#include "affine_fock/errors.hpp"
#include "affine_fock/frenkel_kac.hpp"
#include "affine_fock/json_io.hpp"
#include "affine_fock/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace affine_fock {

namespace {

// (t + 1/t - 2) W* V + V + W*, before grading.
Character tangent_core(const Character& w, const Character& v) {
  Character k;
  k.add_term(1, 1);
  k.add_term(-1, 1);
  k.add_term(0, -2);
  return k * w.dual() * v + v + w.dual();
}

// The node of lambda outside mu, or throws.
Node extra_node(const Partition& mu, const Partition& lambda) {
  if (lambda.size() != mu.size() + 1) throw ConstraintError("partitions must differ by one node");
  std::vector<Node> extra;
  for (const Node& x : nodes(lambda))
    if (!contains(mu, x)) extra.push_back(x);
  if (extra.size() != 1) throw ConstraintError("mu must be contained in lambda");
  return extra.front();
}

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

Character fixed_point_char(const Partition& lambda) { return diagonal_char(lambda); }

Character tangent_char_point(const Partition& lambda, int l) {
  require_level(l);
  Character t;
  for (const auto& [x, h] : hook_lengths(lambda)) {
    if (h % l != 0) continue;
    t.add_term(h, 1);
    t.add_term(-h, 1);
  }
  return t;
}

Character tangent_char_formula(const Partition& mu, int l) {
  require_level(l);
  const Character v = diagonal_char(mu);
  return tangent_core(v, v).graded_piece(l, 0);
}

Character normal_char(const Partition& mu, const Partition& lambda, int i, int l) {
  require_residue(i, l);
  const Node x = extra_node(mu, lambda);
  if (residue(content(x), l) != i) throw ConstraintError("lambda \\ mu is not an i-node");
  Character n = tangent_core(diagonal_char(mu), diagonal_char(lambda));
  n.add_term(0, -1);
  return n.graded_piece(l, 0);
}

Character normal_minus_tangent(const Partition& mu, const Partition& lambda, int i, int l) {
  require_residue(i, l);
  const Node x = extra_node(mu, lambda);
  if (residue(content(x), l) != i) throw ConstraintError("lambda \\ mu is not an i-node");
  Character out;
  for (const Node& a : boundary_nodes(lambda, l, i).addables) out.add_term(content(x) - content(a), 1);
  for (const Node& r : boundary_nodes(mu, l, i).removables) out.add_term(content(x) - content(r), -1);
  return out;
}

Character infinity_chamber_char(const CoreVector& c, const PartitionTuple& q, int l) {
  return quotient_char_rhs(c, q, l);
}

std::vector<int> points_vector(const CoreVector& c, int n, int l) {
  require_core_vector(c, l);
  if (n < 0) throw ConstraintError("number of points must be non-negative");
  // v_j - v_{j+1} = c_j makes v C v^t = sum_j c_j^2, independent of v_0.
  const int sq = std::inner_product(c.begin(), c.end(), c.begin(), 0);
  std::vector<int> v(l);
  v[0] = n + sq / 2;
  for (int j = 1; j < l; ++j) v[j] = v[j - 1] - c[j - 1];
  if (std::any_of(v.begin(), v.end(), [](int x) { return x < 0; }))
    throw ConstraintError("no non-negative dimension vector for this core and n");
  return v;
}

Rational euler_pairing_diag(const Partition& lambda, int l) {
  require_level(l);
  BigInt e = 1;
  for (const auto& [x, h] : hook_lengths(lambda))
    if (h % l == 0) e *= -h * h;
  return Rational(e);
}

Rational normalization(const Partition& lambda, int l) {
  require_level(l);
  BigInt e = 1;
  for (const auto& [x, h] : hook_lengths(lambda))
    if (h % l == 0) e *= -h;
  return Rational(e);
}

Rational geometric_e(int i, const Partition& lambda, const Partition& mu, int l) {
  require_residue(i, l);
  if (lambda.size() != mu.size() + 1) return Rational(0);
  Node x;
  try {
    x = extra_node(mu, lambda);
  } catch (const ConstraintError&) {
    return Rational(0);
  }
  if (residue(content(x), l) != i || !is_removable(lambda, x)) return Rational(0);
  const std::vector<int> v = residue_counts(lambda, l);
  const int pre = mutation_active(Mutation::GeometricPrefactor) ? v[(i + l - 1) % l] + v[i]
                                                                 : v[i] + v[(i + 1) % l];
  Rational g(sign_of(pre));
  for (const Node& a : boundary_nodes(lambda, l, i).addables) g *= -(content(x) - content(a));
  for (const Node& r : boundary_nodes(mu, l, i).removables) {
    const int w = content(x) - content(r);
    if (w == 0) throw std::logic_error("zero weight in a localization denominator");
    g /= -w;
  }
  return g;
}

BosonVector geometric_action_e(int i, const Partition& lambda, int l) {
  BosonVector out;
  const Rational ll = normalization(lambda, l);
  for (const Node& x : boundary_nodes(lambda, l, i).removables) {
    const Partition mu = remove_node(lambda, x);
    out.add(mu, geometric_e(i, lambda, mu, l) * normalization(mu, l) / ll);
  }
  return out;
}

std::vector<std::pair<int, int>> maya_hook_pairs(const Partition& lambda, int l) {
  require_level(l);
  const MayaDiagram m = from_partition(lambda);
  const int lo = std::min(min_defect(m), -1);
  const int hi = std::max(max_defect(m), 1);
  std::vector<std::pair<int, int>> out;
  for (int k = lo; k <= hi; k += 2) {
    if (evaluate(m, k) != 1) continue;
    for (int h = k + 2 * l; h <= hi; h += 2 * l)
      if (evaluate(m, h) == -1) out.emplace_back(k, h);
  }
  return out;
}

std::pair<int, int> node_to_maya_pair(const Partition& lambda, Node x) {
  if (!contains(lambda, x)) throw ConstraintError("node not in partition");
  // Columns end at +1 sites and rows at -1 sites of m_lambda.
  const Partition t = transpose(lambda);
  return {2 * x.a + 1 - 2 * t.row(x.a), 2 * lambda.row(x.b) - 2 * x.b - 1};
}

ParityCheck parity_congruence(const Partition& lambda, Node x, int l) {
  require_level(l);
  if (!is_removable(lambda, x)) throw ConstraintError("parity check needs a removable node");
  const int i = residue(content(x), l);
  const CoreVector c = core_and_quotient(lambda, l).c;
  const int lhs = eta(lambda, l, i, x, Side::Right) + eta(lambda, l, i, x, Side::Left);
  const int rhs = c[(i + l - 1) % l] + c[i] + 1;
  auto even = [](int e) { return e % 2 == 0; };
  return {even(lhs - rhs), even(lhs - rhs - (i == 0 ? 1 : 0))};
}

namespace {

template <class Body>
Report run_over_partitions(const std::string& suite, int l, int D, Body body) {
  require_level(l);
  const auto lambdas = enumerate_up_to(D);
  std::vector<Report> partial(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t idx) { body(lambdas[idx], partial[idx]); });
  Report out{suite, l, D, 0, {}};
  for (auto& r : partial) out.merge(std::move(r));
  out.sort_failures();
  return out;
}

void expect(Report& r, bool ok, const std::string& name, const Partition& lambda, Json lhs, Json rhs) {
  ++r.checked;
  if (!ok) r.add_failure({name, to_json_value(lambda), std::move(lhs), std::move(rhs)});
}

}  // namespace

Report verify_geometric_match(int l, int D) {
  return run_over_partitions("geometric", l, D, [l](const Partition& lambda, Report& r) {
    for (int i = 0; i < l; ++i) {
      const AffineGenerator e{AffineGenerator::Kind::E, i, 0, {}};
      const BosonVector geo = geometric_action_e(i, lambda, l);
      const BosonVector comb = explicit_action(e, lambda, l);
      expect(r, geo == comb, e.to_string(), lambda, to_json_value(geo), to_json_value(comb));
    }
  });
}

Report verify_parity(int l, int D) {
  return run_over_partitions("parity", l, D, [l](const Partition& lambda, Report& r) {
    for (const Node& x : removable_nodes(lambda)) {
      const int i = residue(content(x), l);
      const ParityCheck p = parity_congruence(lambda, x, l);
      const std::string at = "parity(i=" + std::to_string(i) + ",X=" + to_json_value(x).dump() + ")";
      expect(r, p.corrected, at + ":corrected", lambda, p.corrected, true);
      // The uncorrected congruence is off by exactly [i = 0].
      expect(r, p.literal == (i != 0), at + ":literal", lambda, p.literal, i != 0);
    }
  });
}

Report verify_fixed_points(int l, int D) {
  return run_over_partitions("fixed-points", l, D, [l](const Partition& lambda, Report& r) {
    const CoreQuotient cq = core_and_quotient(lambda, l);
    const Character f = fixed_point_char(lambda);
    const Character inf = infinity_chamber_char(cq.c, cq.q, l);
    expect(r, f == inf, "chamber_char", lambda, to_json_value(f), to_json_value(inf));

    const Character tp = tangent_char_point(lambda, l);
    const Character tf = tangent_char_formula(lambda, l);
    expect(r, tp == tf, "tangent_char", lambda, to_json_value(tp), to_json_value(tf));
    const int qsize = tuple_degree(cq.q);
    expect(r, tp.at_one() == 2 * qsize, "tangent_dim", lambda, tp.at_one(), 2 * qsize);

    std::vector<std::pair<int, int>> from_nodes;
    for (const auto& [x, h] : hook_lengths(lambda))
      if (h % l == 0) from_nodes.push_back(node_to_maya_pair(lambda, x));
    std::sort(from_nodes.begin(), from_nodes.end());
    const bool injective = std::adjacent_find(from_nodes.begin(), from_nodes.end()) == from_nodes.end();
    auto pairs = maya_hook_pairs(lambda, l);
    std::sort(pairs.begin(), pairs.end());
    expect(r, injective && from_nodes == pairs, "hook_bijection", lambda, from_nodes, pairs);

    const std::vector<int> v = residue_counts(lambda, l);
    const std::vector<int> pv = points_vector(cq.c, qsize, l);
    expect(r, v == pv, "points_vector", lambda, pv, v);

    const Rational ll = normalization(lambda, l);
    const Rational e = euler_pairing_diag(lambda, l);
    long qualifying = 0;
    for (const auto& [x, h] : hook_lengths(lambda)) qualifying += h % l == 0;
    const Rational rhs = (qualifying % 2 == 0 ? e : -e);
    expect(r, ll * ll == rhs, "normalization_square", lambda, to_string(ll * ll), to_string(rhs));

    for (const Node& x : removable_nodes(lambda)) {
      const int i = residue(content(x), l);
      const Partition mu = remove_node(lambda, x);
      const Character lhs = normal_char(mu, lambda, i, l) - tangent_char_formula(mu, l);
      const Character rhs2 = normal_minus_tangent(mu, lambda, i, l);
      expect(r, lhs == rhs2, "normal_char", lambda, to_json_value(lhs), to_json_value(rhs2));
    }
  });
}

}  // namespace affine_fock
