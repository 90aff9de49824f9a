#include "affine_fock/fock.hpp"

#include "affine_fock/conventions.hpp"
#include "affine_fock/errors.hpp"
#include "affine_fock/json_io.hpp"
#include "affine_fock/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace affine_fock {

namespace {

// Number of positions h > k with m(h) = -1.
int empty_sites_above(const MayaDiagram& m, int k) {
  int s = static_cast<int>(m.holes_above.end() -
                           std::upper_bound(m.holes_above.begin(), m.holes_above.end(), k));
  if (k < 0) {
    const int negatives_between = (-1 - k) / 2;
    const int particles_between = static_cast<int>(
        m.particles_below.end() -
        std::upper_bound(m.particles_below.begin(), m.particles_below.end(), k));
    s += negatives_between - particles_between;
  }
  return s;
}

// Number of positions h < k with m(h) = +1 (the sign under Mutation::PsiSign).
int filled_sites_below(const MayaDiagram& m, int k) {
  int s = static_cast<int>(std::lower_bound(m.particles_below.begin(), m.particles_below.end(), k) -
                           m.particles_below.begin());
  if (k > 0) {
    const int positives_between = (k - 1) / 2;
    const int holes_between = static_cast<int>(
        std::lower_bound(m.holes_above.begin(), m.holes_above.end(), k) - m.holes_above.begin());
    s += positives_between - holes_between;
  }
  return s;
}

int clifford_sign(const MayaDiagram& m, int k) {
  const int count = mutation_active(Mutation::PsiSign) ? filled_sites_below(m, k)
                                                       : empty_sites_above(m, k);
  return count % 2 == 0 ? 1 : -1;
}

void insert_sorted(std::vector<int>& v, int x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); }
void erase_sorted(std::vector<int>& v, int x) { v.erase(std::lower_bound(v.begin(), v.end(), x)); }

std::vector<std::pair<Partition, int>> murnaghan_nakayama(int n, const Partition& lambda) {
  const int m = std::abs(n);
  std::vector<std::pair<Partition, int>> out;
  if (n > 0 && lambda.size() < m) return out;
  // Beta-numbers x_i = lambda_i - i over N rows; every value below -N is
  // implicitly occupied.
  const int N = lambda.length() + (n < 0 ? m : 0);
  std::vector<int> x(N);
  for (int i = 0; i < N; ++i) x[i] = lambda.row(i) - (i + 1);
  auto occupied = [&](int y) { return y < -N || std::find(x.begin(), x.end(), y) != x.end(); };
  for (int i = 0; i < N; ++i) {
    const int y = n < 0 ? x[i] + m : x[i] - m;
    if (occupied(y)) continue;
    const int lo = std::min(x[i], y);
    const int hi = std::max(x[i], y);
    const auto crossed = std::count_if(x.begin(), x.end(), [&](int v) { return lo < v && v < hi; });
    std::vector<int> nx = x;
    nx[i] = y;
    std::sort(nx.begin(), nx.end(), std::greater<>());
    std::vector<int> parts;
    for (int r = 0; r < N; ++r)
      if (nx[r] + r + 1 > 0) parts.push_back(nx[r] + r + 1);
    out.emplace_back(Partition(std::move(parts)), crossed % 2 == 0 ? 1 : -1);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

BigInt centralizer_order(const Partition& rho) {
  BigInt z = 1;
  const auto& p = rho.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int r = 0; r < mult; ++r) z *= p[i];
    for (int r = 2; r <= mult; ++r) z *= r;
    i = j;
  }
  return z;
}

int max_degree(const BosonVector& v) {
  int d = -1;
  for (const auto& entry : v) d = std::max(d, entry.first.size());
  return d;
}

std::optional<std::pair<int, MayaDiagram>> psi_basis(HalfInt k, const MayaDiagram& m) {
  if (evaluate(m, k.twice) != 1) return std::nullopt;
  const int sign = clifford_sign(m, k.twice);
  MayaDiagram out = m;
  if (k.twice < 0)
    erase_sorted(out.particles_below, k.twice);
  else
    insert_sorted(out.holes_above, k.twice);
  return std::make_pair(sign, std::move(out));
}

std::optional<std::pair<int, MayaDiagram>> psi_star_basis(HalfInt k, const MayaDiagram& m) {
  if (evaluate(m, k.twice) != -1) return std::nullopt;
  const int sign = clifford_sign(m, k.twice);
  MayaDiagram out = m;
  if (k.twice < 0)
    insert_sorted(out.particles_below, k.twice);
  else
    erase_sorted(out.holes_above, k.twice);
  return std::make_pair(sign, std::move(out));
}

namespace {
template <class Op>
FermionVector apply_clifford(const FermionVector& v, Op op) {
  return v.apply<MayaDiagram>([&](const MayaDiagram& m) {
    FermionVector r;
    if (auto res = op(m)) r.add(res->second, Rational(res->first));
    return r;
  });
}
}  // namespace

FermionVector psi(HalfInt k, const FermionVector& v) {
  return apply_clifford(v, [&](const MayaDiagram& m) { return psi_basis(k, m); });
}

FermionVector psi_star(HalfInt k, const FermionVector& v) {
  return apply_clifford(v, [&](const MayaDiagram& m) { return psi_star_basis(k, m); });
}

const std::vector<std::pair<Partition, int>>& heis_basis(int n, const Partition& lambda) {
  if (n == 0) throw ConstraintError("heis(0) is not a Heisenberg generator");
  static std::map<std::pair<int, Partition>, std::vector<std::pair<Partition, int>>> cache;
  static std::shared_mutex mu;
  const auto key = std::make_pair(n, lambda);
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto value = murnaghan_nakayama(n, lambda);
  std::unique_lock lock(mu);
  return cache.try_emplace(key, std::move(value)).first->second;
}

BosonVector heis(int n, const BosonVector& v) {
  return v.apply<Partition>([&](const Partition& lambda) {
    BosonVector r;
    for (const auto& [mu, s] : heis_basis(n, lambda)) r.add(mu, Rational(s));
    return r;
  });
}

BosonVector gamma_coeff(GammaSign sign, bool inverse, int d, const BosonVector& v,
                        const DegreeWindow& w) {
  if (d < 0) throw ConstraintError("gamma_coeff needs d >= 0");
  if (sign == GammaSign::Plus && !v.is_zero() && max_degree(v) + d > w.max_degree)
    throw WindowOverflow("Gamma^+ coefficient leaves the degree window");
  if (d == 0) return v;
  BosonVector out;
  for (const Partition& rho : enumerate_partitions(d)) {
    Rational coeff(BigInt(1), centralizer_order(rho));
    if (inverse && rho.length() % 2 == 1) coeff = -coeff;
    BosonVector cur = v;
    for (int r : rho.parts()) {
      cur = heis(sign == GammaSign::Plus ? -r : r, cur);
      if (cur.is_zero()) break;
    }
    out += coeff * cur;
  }
  return out;
}

FermionVector fermion_field_coeff(FieldKind kind, HalfInt j, const FermionVector& v) {
  return kind == FieldKind::Psi ? psi(j, v) : psi_star(j, v);
}

ChargedVector shift_op(const ChargedVector& v, int step) {
  ChargedVector out;
  for (const auto& [x, c] : v) out.add(ChargedLabel{x.c + step, x.lambda}, c);
  return out;
}

ChargedVector degree_op(const ChargedVector& v) {
  ChargedVector out;
  for (const auto& [x, c] : v) out.add(x, c * x.c);
  return out;
}

ChargedVector to_charged(const FermionVector& v) {
  ChargedVector out;
  for (const auto& [m, c] : v) {
    auto [ch, lambda] = to_charge_partition(m);
    out.add(ChargedLabel{ch, std::move(lambda)}, c);
  }
  return out;
}

FermionVector to_fermion(const ChargedVector& v) {
  FermionVector out;
  for (const auto& [x, c] : v) out.add(maya_of(x.c, x.lambda), c);
  return out;
}

ChargedVector boson_field_coeff(FieldKind kind, HalfInt j, const ChargedLabel& x,
                                const DegreeWindow& w) {
  // Psi: z^D contributes z^c, so b - a = j - 1/2 - c with a, b the Gamma^-
  // and Gamma^+ orders. Psi*: z^{-D} contributes z^{-c}, b - a = c - j - 1/2.
  const bool is_psi = kind == FieldKind::Psi;
  const int target = is_psi ? (j.twice - 1) / 2 - x.c : x.c - (j.twice + 1) / 2;
  const int n = x.lambda.size();
  ChargedVector out;
  const BosonVector start = BosonVector::basis(x.lambda);
  for (int a = 0; a <= n; ++a) {
    const int b = target + a;
    if (b < 0) continue;
    const BosonVector lowered = gamma_coeff(GammaSign::Minus, is_psi, a, start, w);
    if (lowered.is_zero()) continue;
    const BosonVector raised = gamma_coeff(GammaSign::Plus, !is_psi, b, lowered, w);
    for (const auto& [mu, c] : raised) out.add(ChargedLabel{x.c + (is_psi ? 1 : -1), mu}, c);
  }
  return out;
}

Report verify_boson_fermion(int D, int C) {
  if (D < 0 || C < 0) throw ConstraintError("boson-fermion window must be non-negative");
  std::vector<ChargedLabel> items;
  for (int c = -C; c <= C; ++c)
    for (const Partition& lambda : enumerate_up_to(D)) items.push_back({c, lambda});
  std::vector<Report> partial(items.size());
  const DegreeWindow w{D, C};
  parallel_for(items.size(), [&](std::size_t idx) {
    const ChargedLabel& x = items[idx];
    Report& r = partial[idx];
    const FermionVector m = FermionVector::basis(maya_of(x.c, x.lambda));
    const int n = x.lambda.size();
    for (int t = -n - 1; t <= D - n; ++t) {
      for (FieldKind kind : {FieldKind::Psi, FieldKind::PsiStar}) {
        const bool is_psi = kind == FieldKind::Psi;
        const HalfInt j(is_psi ? 2 * (t + x.c) + 1 : 2 * (x.c - t) - 1);
        const ChargedVector lhs = to_charged(fermion_field_coeff(kind, j, m));
        const ChargedVector rhs = boson_field_coeff(kind, j, x, w);
        ++r.checked;
        if (lhs != rhs) {
          r.add_failure({std::string(is_psi ? "psi(" : "psi*(") + j.to_string() + ")",
                         to_json_value(x), to_json_value(lhs), to_json_value(rhs)});
        }
      }
    }
  });
  Report out{"boson-fermion", 0, D, 0, {}};
  for (auto& r : partial) out.merge(std::move(r));
  out.sort_failures();
  return out;
}

}  // namespace affine_fock
