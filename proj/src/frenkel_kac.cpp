#include "affine_fock/frenkel_kac.hpp"

#include "affine_fock/conventions.hpp"
#include "affine_fock/errors.hpp"
#include "affine_fock/json_io.hpp"
#include "affine_fock/parallel.hpp"

#include <functional>
#include <numeric>
#include <regex>

namespace affine_fock {

RootVector simple_root(int i, int l) {
  require_level(l);
  if (i < 1 || i > l - 1) throw ConstraintError("simple root index must lie in 1..l-1");
  RootVector a(l, 0);
  a[i - 1] = 1;
  a[i] = -1;
  return a;
}

RootVector highest_root(int l) { return positive_root(0, l - 1, l); }

RootVector positive_root(int k, int k2, int l) {
  require_level(l);
  if (!(0 <= k && k < k2 && k2 < l)) throw ConstraintError("positive root needs 0 <= k < k' < l");
  RootVector a(l, 0);
  a[k] = 1;
  a[k2] = -1;
  return a;
}

void require_root_vector(const RootVector& a, int l) {
  if (static_cast<int>(a.size()) != l) throw ConstraintError("root vector must have l entries");
  if (std::accumulate(a.begin(), a.end(), 0) != 0)
    throw ConstraintError("root vector entries must sum to 0");
}

int pairing(const RootVector& a, const RootVector& b) {
  if (a.size() != b.size()) throw ConstraintError("pairing of vectors of different length");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

RootVector operator+(const RootVector& a, const RootVector& b) {
  if (a.size() != b.size()) throw ConstraintError("sum of vectors of different length");
  RootVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

RootVector operator-(const RootVector& a) {
  RootVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
  return r;
}

int epsilon(const RootVector& a, const RootVector& b) {
  const int l = static_cast<int>(a.size());
  require_root_vector(a, l);
  require_root_vector(b, l);
  // a = sum n_i alpha_i with n_i = a_{1/2} + ... + a_{i-1/2}; the table gives
  // eps(alpha_i, b) = (-1)^{b_{i+1/2}}.
  long s = 0;
  long n_i = 0;
  for (int i = 1; i < l; ++i) {
    n_i += a[i - 1];
    s += n_i * b[i];
  }
  if (mutation_active(Mutation::EpsilonEntry) && l >= 3) s += long(a[0]) * (b[0] + b[1]);
  return s % 2 == 0 ? 1 : -1;
}

bool operator<(const LBLabel& x, const LBLabel& y) {
  if (x.beta != y.beta) return x.beta < y.beta;
  return std::lexicographical_compare(x.q.begin(), x.q.end(), y.q.begin(), y.q.end(),
                                      [](const Partition& p, const Partition& r) { return p < r; });
}

int tuple_degree(const PartitionTuple& q) {
  int d = 0;
  for (const auto& p : q) d += p.size();
  return d;
}

LatticeBosonVector strand_heis(int slot, int n, const LatticeBosonVector& v) {
  LatticeBosonVector out;
  for (const auto& [x, c] : v) {
    if (slot < 0 || slot >= static_cast<int>(x.q.size())) throw ConstraintError("strand slot out of range");
    for (const auto& [mu, s] : heis_basis(n, x.q[slot])) {
      LBLabel y = x;
      y.q[slot] = mu;
      out.add(y, c * s);
    }
  }
  return out;
}

LatticeBosonVector lattice_heis(const RootVector& alpha, int n, const LatticeBosonVector& v) {
  LatticeBosonVector out;
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (alpha[k] != 0) out += Rational(alpha[k]) * strand_heis(static_cast<int>(k), n, v);
  return out;
}

LatticeBosonVector heis_tensor(int i, int n, const LatticeBosonVector& v) {
  LatticeBosonVector out = strand_heis(i - 1, n, v);
  out -= strand_heis(i, n, v);
  return out;
}

namespace {

// Coefficient of z^{d} in exp(sum z^n/n alpha(-n)) (creation) or of z^{-d} in
// exp(-sum z^{-n}/n alpha(n)).
LatticeBosonVector exp_coeff(const RootVector& alpha, int d, const LatticeBosonVector& v,
                             bool creation) {
  if (d == 0) return v;
  LatticeBosonVector out;
  for (const Partition& rho : enumerate_partitions(d)) {
    Rational coeff(BigInt(1), centralizer_order(rho));
    if (!creation && rho.length() % 2 == 1) coeff = -coeff;
    LatticeBosonVector cur = v;
    for (int r : rho.parts()) {
      cur = lattice_heis(alpha, creation ? -r : r, cur);
      if (cur.is_zero()) break;
    }
    out += coeff * cur;
  }
  return out;
}

}  // namespace

LatticeBosonVector vertex_coeff(const RootVector& alpha, int m, const LatticeBosonVector& v,
                                const DegreeWindow& w) {
  LatticeBosonVector out;
  for (const auto& [x, c] : v) {
    const int l = static_cast<int>(x.beta.size());
    require_root_vector(alpha, l);
    // z^{(a,a)/2 + (a,beta)} from the lattice part; the annihilation factor
    // lowers the quotient degree by b and the creation factor raises it by A.
    const int s = pairing(alpha, alpha) / 2 + pairing(alpha, x.beta);
    const int deg = tuple_degree(x.q);
    const int target = deg + m - s;
    if (target < 0) continue;
    if (target > w.max_degree) throw WindowOverflow("vertex operator leaves the degree window");
    const RootVector nb = alpha + x.beta;
    const LatticeBosonVector one = LatticeBosonVector::basis(x, c);
    for (int b = 0; b <= deg; ++b) {
      const int A = m - s + b;
      if (A < 0) continue;
      const LatticeBosonVector lowered = exp_coeff(alpha, b, one, false);
      if (lowered.is_zero()) continue;
      for (const auto& [y, cy] : exp_coeff(alpha, A, lowered, true)) out.add(LBLabel{nb, y.q}, cy);
    }
  }
  return out;
}

std::string AffineGenerator::to_string() const {
  auto root = [&] {
    std::string s = "(";
    for (std::size_t k = 0; k < alpha.size(); ++k) s += (k ? "," : "") + std::to_string(alpha[k]);
    return s + ")";
  };
  switch (kind) {
    case Kind::E: return "e_" + std::to_string(i);
    case Kind::F: return "f_" + std::to_string(i);
    case Kind::H: return "h_" + std::to_string(i);
    case Kind::P: return "p_" + std::to_string(i) + "(" + std::to_string(m) + ")";
    case Kind::ERoot: return "e" + root() + "t^" + std::to_string(m);
    case Kind::FRoot: return "f" + root() + "t^" + std::to_string(m);
    case Kind::C: return "c";
    case Kind::D: return "d";
  }
  return "?";
}

AffineGenerator parse_generator(const std::string& text) {
  static const std::regex chevalley(R"(^\s*([efh])_(\d+)\s*$)");
  static const std::regex heis(R"(^\s*p_(\d+)\(\s*([+-]?\d+)\s*\)\s*$)");
  std::smatch mt;
  AffineGenerator g;
  try {
    if (std::regex_match(text, mt, chevalley)) {
      const char k = mt[1].str()[0];
      g.kind = k == 'e' ? AffineGenerator::Kind::E
                        : (k == 'f' ? AffineGenerator::Kind::F : AffineGenerator::Kind::H);
      g.i = std::stoi(mt[2].str());
      return g;
    }
    if (std::regex_match(text, mt, heis)) {
      g.kind = AffineGenerator::Kind::P;
      g.i = std::stoi(mt[1].str());
      g.m = std::stoi(mt[2].str());
      return g;
    }
  } catch (const std::out_of_range&) {
    throw ParseError("generator index out of range: " + text);
  }
  if (text == "c") return {AffineGenerator::Kind::C, 0, 0, {}};
  if (text == "d") return {AffineGenerator::Kind::D, 0, 0, {}};
  throw ParseError("cannot parse generator '" + text + "' (expected e_i, f_i, h_i, p_i(m), c or d)");
}

void require_generator(const AffineGenerator& g, int l) {
  require_level(l);
  using K = AffineGenerator::Kind;
  switch (g.kind) {
    case K::E:
    case K::F:
    case K::H: require_residue(g.i, l); break;
    case K::P:
      if (g.i < 1 || g.i > l - 1) throw ConstraintError("p_i needs 1 <= i <= l-1");
      if (g.m == 0) throw ConstraintError("p_i(m) needs m != 0; use h_i for m = 0");
      break;
    case K::ERoot:
    case K::FRoot: {
      require_root_vector(g.alpha, l);
      int plus = -1, minus = -1, nonzero = 0;
      for (int k = 0; k < l; ++k) {
        if (g.alpha[k] != 0) ++nonzero;
        if (g.alpha[k] == 1) plus = k;
        if (g.alpha[k] == -1) minus = k;
      }
      if (nonzero != 2 || plus < 0 || minus < 0 || plus > minus)
        throw ConstraintError("root generator needs a positive root e_k - e_k'");
      break;
    }
    case K::C:
    case K::D: break;
  }
}

LatticeBosonVector fk_action(const AffineGenerator& g, const LatticeBosonVector& v, int l,
                             const DegreeWindow& w) {
  require_generator(g, l);
  using K = AffineGenerator::Kind;
  if (g.kind == K::C) return v;
  if (g.kind == K::D) return {};
  if (g.kind == K::P) {
    for (const auto& entry : v)
      if (tuple_degree(entry.first.q) - g.m > w.max_degree)
        throw WindowOverflow("p_i(m) leaves the degree window");
    return heis_tensor(g.i, g.m, v);
  }
  const RootVector theta = highest_root(l);
  LatticeBosonVector out;
  for (const auto& [x, c] : v) {
    require_root_vector(x.beta, l);
    const LatticeBosonVector one = LatticeBosonVector::basis(x, c);
    switch (g.kind) {
      case K::H: {
        const int w0 = g.i == 0 ? 1 - pairing(theta, x.beta) : pairing(simple_root(g.i, l), x.beta);
        out += Rational(w0) * one;
        break;
      }
      case K::E:
        if (g.i == 0)
          out += Rational(epsilon(theta, x.beta)) * vertex_coeff(-theta, -1, one, w);
        else {
          const RootVector a = simple_root(g.i, l);
          out += Rational(epsilon(a, x.beta)) * vertex_coeff(a, 0, one, w);
        }
        break;
      case K::F:
        if (g.i == 0)
          out -= Rational(epsilon(theta, x.beta)) * vertex_coeff(theta, 1, one, w);
        else {
          const RootVector a = simple_root(g.i, l);
          out -= Rational(epsilon(a, x.beta)) * vertex_coeff(-a, 0, one, w);
        }
        break;
      case K::ERoot: out += Rational(epsilon(g.alpha, x.beta)) * vertex_coeff(g.alpha, g.m, one, w); break;
      case K::FRoot: out -= Rational(epsilon(g.alpha, x.beta)) * vertex_coeff(-g.alpha, -g.m, one, w); break;
      default: break;
    }
  }
  return out;
}

BosonVector explicit_action(const AffineGenerator& g, const Partition& lambda, int l) {
  require_generator(g, l);
  using K = AffineGenerator::Kind;
  if (!g.is_chevalley())
    throw ConstraintError("the Young-diagram action is defined for e_i, f_i, h_i only");
  const int i = g.i;
  const Boundary bd = boundary_nodes(lambda, l, i);
  BosonVector out;
  if (g.kind == K::H) {
    out.add(lambda, Rational(static_cast<long>(bd.addables.size()) - static_cast<long>(bd.removables.size())));
    return out;
  }
  const Side side = mutation_active(Mutation::EtaOrientation) ? Side::Left : Side::Right;
  const std::vector<int> v = residue_counts(lambda, l);
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
  if (g.kind == K::E) {
    const int base = v[i] + v[(i + 1) % l];
    for (const Node& x : bd.removables)
      out.add(remove_node(lambda, x), Rational(sign(base + eta(lambda, l, i, x, side))));
  } else {
    for (const Node& x : bd.addables) {
      const Partition mu = add_node(lambda, x);
      // The transpose of e_i: the sign is read on the larger diagram mu.
      const std::vector<int> vm = residue_counts(mu, l);
      const int base = mutation_active(Mutation::FSignLiteral) ? v[(i + l - 1) % l] + v[i]
                                                               : vm[i] + vm[(i + 1) % l];
      out.add(mu, Rational(sign(base + eta(lambda, l, i, x, side))));
    }
  }
  return out;
}

BosonVector explicit_action(const AffineGenerator& g, const BosonVector& v, int l) {
  return v.apply<Partition>([&](const Partition& lambda) { return explicit_action(g, lambda, l); });
}

LatticeBosonVector transport(const BosonVector& v, int l) {
  LatticeBosonVector out;
  for (const auto& [lambda, c] : v) {
    CoreQuotient cq = core_and_quotient(lambda, l);
    out.add(LBLabel{std::move(cq.c), std::move(cq.q)}, c);
  }
  return out;
}

BosonVector transport_inverse(const LatticeBosonVector& v, int l) {
  BosonVector out;
  for (const auto& [x, c] : v) out.add(cq_inverse(x.beta, x.q, l), c);
  return out;
}

int cartan_entry(int i, int j, int l) {
  require_residue(i, l);
  require_residue(j, l);
  if (i == j) return 2;
  if (l == 2) return -2;
  const int d = residue(i - j, l);
  return (d == 1 || d == l - 1) ? -1 : 0;
}

namespace {

std::vector<AffineGenerator> chevalley_generators(int l) {
  std::vector<AffineGenerator> gs;
  for (auto k : {AffineGenerator::Kind::E, AffineGenerator::Kind::F, AffineGenerator::Kind::H})
    for (int i = 0; i < l; ++i) gs.push_back({k, i, 0, {}});
  return gs;
}

AffineGenerator chev(AffineGenerator::Kind k, int i) { return {k, i, 0, {}}; }

Json lambda_json(const Partition& p) { return to_json_value(p); }

}  // namespace

Report verify_intertwining(int l, int D) {
  require_level(l);
  const auto lambdas = enumerate_up_to(D);
  const auto gens = chevalley_generators(l);
  const DegreeWindow w{D + 1, 0};
  std::vector<Report> partial(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t idx) {
    const Partition& lambda = lambdas[idx];
    const LatticeBosonVector start = transport(BosonVector::basis(lambda), l);
    for (const auto& g : gens) {
      const LatticeBosonVector lhs = transport(explicit_action(g, lambda, l), l);
      const LatticeBosonVector rhs = fk_action(g, start, l, w);
      ++partial[idx].checked;
      if (lhs != rhs)
        partial[idx].add_failure({g.to_string(), lambda_json(lambda), to_json_value(lhs), to_json_value(rhs)});
    }
  });
  Report out{"frenkel-kac", l, D, 0, {}};
  for (auto& r : partial) out.merge(std::move(r));
  out.sort_failures();
  return out;
}

Report verify_relations(int l, int D) {
  require_level(l);
  using K = AffineGenerator::Kind;
  const auto lambdas = enumerate_up_to(D);
  std::vector<Report> partial(lambdas.size());
  auto op = [l](const AffineGenerator& g) {
    return [g, l](const BosonVector& v) { return explicit_action(g, v, l); };
  };
  using Op = std::function<BosonVector(const BosonVector&)>;
  auto commutator = [](const Op& a, const Op& b, const BosonVector& v) { return a(b(v)) - b(a(v)); };

  parallel_for(lambdas.size(), [&](std::size_t idx) {
    const Partition& lambda = lambdas[idx];
    const int n = lambda.size();
    const BosonVector b = BosonVector::basis(lambda);
    Report& r = partial[idx];
    auto check = [&](const std::string& name, const BosonVector& lhs, const BosonVector& rhs) {
      ++r.checked;
      if (lhs != rhs) r.add_failure({name, lambda_json(lambda), to_json_value(lhs), to_json_value(rhs)});
    };
    for (int i = 0; i < l; ++i) {
      const Op hi = op(chev(K::H, i)), ei = op(chev(K::E, i)), fi = op(chev(K::F, i));
      for (int j = 0; j < l; ++j) {
        const Op hj = op(chev(K::H, j)), ej = op(chev(K::E, j)), fj = op(chev(K::F, j));
        const std::string ij = std::to_string(i) + "," + std::to_string(j);
        const Rational a(cartan_entry(i, j, l));
        check("[h_" + std::to_string(i) + ",h_" + std::to_string(j) + "]", commutator(hi, hj, b), {});
        check("[h_" + std::to_string(i) + ",e_" + std::to_string(j) + "]", commutator(hi, ej, b), a * ej(b));
        if (n + 1 <= D) {
          check("[h_" + std::to_string(i) + ",f_" + std::to_string(j) + "]", commutator(hi, fj, b),
                -a * fj(b));
          check("[e_" + std::to_string(i) + ",f_" + std::to_string(j) + "]", commutator(ei, fj, b),
                i == j ? hi(b) : BosonVector{});
        }
        if (i == j) continue;
        // (ad x_i)^{1-a_ij} x_j = sum_k (-1)^k C(N,k) x_i^{N-k} x_j x_i^k.
        const int N = 1 - cartan_entry(i, j, l);
        auto serre = [&](const Op& xi, const Op& xj) {
          BosonVector total;
          long binom = 1;
          for (int k = 0; k <= N; ++k) {
            BosonVector t = b;
            for (int s = 0; s < k; ++s) t = xi(t);
            t = xj(t);
            for (int s = 0; s < N - k; ++s) t = xi(t);
            total += Rational(k % 2 == 0 ? binom : -binom) * t;
            binom = binom * (N - k) / (k + 1);
          }
          return total;
        };
        check("serre_e(" + ij + ")", serre(ei, ej), {});
        if (n + N + 1 <= D) check("serre_f(" + ij + ")", serre(fi, fj), {});
      }
    }
  });
  Report out{"relations", l, D, 0, {}};
  for (auto& r : partial) out.merge(std::move(r));
  out.sort_failures();
  return out;
}

}  // namespace affine_fock
