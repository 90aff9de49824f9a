#include "affine_fock/partitions.hpp"

#include "affine_fock/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace affine_fock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t t = 0; t < parts_.size(); ++t) {
    if (parts_[t] < 1) throw ConstraintError("partition parts must be positive");
    if (t > 0 && parts_[t] > parts_[t - 1])
      throw ConstraintError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t t = 0; t < parts_.size(); ++t) os << (t ? "," : "") << parts_[t];
  os << ")";
  return os.str();
}

bool operator<(const Partition& x, const Partition& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return std::lexicographical_compare(y.parts().begin(), y.parts().end(), x.parts().begin(),
                                      x.parts().end());
}

bool contains(const Partition& lambda, Node x) {
  return x.a >= 0 && x.b >= 0 && x.a < lambda.row(x.b);
}

Partition transpose(const Partition& lambda) {
  std::vector<int> t(lambda.empty() ? 0 : lambda.parts()[0], 0);
  for (int r : lambda.parts())
    for (int c = 0; c < r; ++c) ++t[c];
  return Partition(std::move(t));
}

std::vector<Node> nodes(const Partition& lambda) {
  std::vector<Node> out;
  out.reserve(lambda.size());
  for (int b = 0; b < lambda.length(); ++b)
    for (int a = 0; a < lambda.row(b); ++a) out.push_back({a, b});
  return out;
}

LaurentPoly diagonal_char(const Partition& lambda) {
  LaurentPoly f;
  for (Node x : nodes(lambda)) f.add_term(content(x), 1);
  return f;
}

void require_level(int l) {
  if (l < 2) throw ConstraintError("l must be at least 2");
}

void require_residue(int i, int l) {
  require_level(l);
  if (i < 0 || i >= l) throw ConstraintError("residue out of range");
}

std::vector<int> residue_counts(const Partition& lambda, int l) {
  require_level(l);
  std::vector<int> v(l, 0);
  for (Node x : nodes(lambda)) ++v[residue(content(x), l)];
  return v;
}

namespace {
void sort_by_content(std::vector<Node>& xs) {
  std::sort(xs.begin(), xs.end(),
            [](Node p, Node q) { return content(p) < content(q); });
}
}  // namespace

std::vector<Node> addable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  for (int b = 0; b <= lambda.length(); ++b) {
    Node x{lambda.row(b), b};
    if (b == 0 || lambda.row(b - 1) > x.a) out.push_back(x);
  }
  sort_by_content(out);
  return out;
}

std::vector<Node> removable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  for (int b = 0; b < lambda.length(); ++b)
    if (lambda.row(b + 1) < lambda.row(b)) out.push_back({lambda.row(b) - 1, b});
  sort_by_content(out);
  return out;
}

bool is_addable(const Partition& lambda, Node x) {
  for (Node y : addable_nodes(lambda))
    if (y == x) return true;
  return false;
}

bool is_removable(const Partition& lambda, Node x) {
  for (Node y : removable_nodes(lambda))
    if (y == x) return true;
  return false;
}

Boundary boundary_nodes(const Partition& lambda, int l, int i) {
  require_residue(i, l);
  Boundary out;
  for (Node x : addable_nodes(lambda))
    if (residue(content(x), l) == i) out.addables.push_back(x);
  for (Node x : removable_nodes(lambda))
    if (residue(content(x), l) == i) out.removables.push_back(x);
  return out;
}

int eta(const Partition& lambda, int l, int i, Node x, Side side) {
  if (!is_addable(lambda, x) && !is_removable(lambda, x))
    throw ConstraintError("eta: node is neither addable nor removable");
  const Boundary bd = boundary_nodes(lambda, l, i);
  const int cx = content(x);
  auto counts = [&](Node y) {
    return side == Side::Left ? content(y) < cx : content(y) > cx;
  };
  int s = 0;
  for (Node y : bd.addables) s += counts(y);
  for (Node y : bd.removables) s -= counts(y);
  return s;
}

std::map<Node, int> hook_lengths(const Partition& lambda) {
  const Partition t = transpose(lambda);
  std::map<Node, int> out;
  for (Node x : nodes(lambda)) {
    const int arm = lambda.row(x.b) - x.a - 1;
    const int leg = t.row(x.a) - x.b - 1;
    out[x] = arm + leg + 1;
  }
  return out;
}

Partition add_node(const Partition& lambda, Node x) {
  if (!is_addable(lambda, x)) throw ConstraintError("add_node: node is not addable");
  std::vector<int> p = lambda.parts();
  if (x.b == lambda.length()) p.push_back(1);
  else ++p[x.b];
  return Partition(std::move(p));
}

Partition remove_node(const Partition& lambda, Node x) {
  if (!is_removable(lambda, x)) throw ConstraintError("remove_node: node is not removable");
  std::vector<int> p = lambda.parts();
  if (--p[x.b] == 0) p.pop_back();
  return Partition(std::move(p));
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Reverse-lex generation starting from (n).
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    // Find the rightmost part > 1.
    int k = static_cast<int>(a.size()) - 1;
    int rem = 0;
    while (k >= 0 && a[k] == 1) {
      rem += 1;
      --k;
    }
    if (k < 0) break;
    --a[k];
    rem += 1;
    a.resize(k + 1);
    const int cap = a[k];
    while (rem > 0) {
      const int take = std::min(cap, rem);
      a.push_back(take);
      rem -= take;
    }
  }
  return out;
}

std::vector<Partition> enumerate_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    auto ps = enumerate_partitions(m);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> enumerate_with_residues(const std::vector<int>& v) {
  const int l = static_cast<int>(v.size());
  require_level(l);
  for (int x : v)
    if (x < 0) throw ConstraintError("residue counts must be non-negative");
  const int n = std::accumulate(v.begin(), v.end(), 0);
  std::vector<Partition> out;
  for (const Partition& p : enumerate_partitions(n))
    if (residue_counts(p, l) == v) out.push_back(p);
  return out;
}

}  // namespace affine_fock
