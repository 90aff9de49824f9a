#pragma once

#include "affine_fock/laurent.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace affine_fock {

// Weakly decreasing sequence of positive integers; no trailing zeros.
class Partition {
 public:
  Partition() = default;
  // Throws ConstraintError unless parts is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Row length, zero past the last row.
  int row(int r) const { return r < length() ? parts_[r] : 0; }

  friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Graded-lexicographic order: by size, then larger part sequences first.
// Under this order enumerate(3) is (3), (2,1), (1,1,1).
bool operator<(const Partition& x, const Partition& y);

// A cell of a Young diagram. a is the column and b the row, both from 0, so
// (a,b) is in lambda iff a < parts[b], and the content is a - b.
struct Node {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Node&, const Node&) = default;
};

inline int content(Node x) { return x.a - x.b; }
bool contains(const Partition& lambda, Node x);
Partition transpose(const Partition& lambda);
std::vector<Node> nodes(const Partition& lambda);

// f_lambda(z) = sum_j n_j z^j with n_j the number of nodes of content j.
LaurentPoly diagonal_char(const Partition& lambda);

// v_i(lambda) = number of nodes with content = i mod l, for i = 0..l-1.
std::vector<int> residue_counts(const Partition& lambda, int l);
inline int residue(int c, int l) { return ((c % l) + l) % l; }

// All addable / removable nodes, sorted by increasing content.
std::vector<Node> addable_nodes(const Partition& lambda);
std::vector<Node> removable_nodes(const Partition& lambda);
bool is_addable(const Partition& lambda, Node x);
bool is_removable(const Partition& lambda, Node x);

struct Boundary {
  std::vector<Node> addables;
  std::vector<Node> removables;
};
// The addable and removable i-nodes, each sorted by content.
Boundary boundary_nodes(const Partition& lambda, int l, int i);

enum class Side { Left, Right };

// eta^- (Left) or eta^+ (Right): addable minus removable i-nodes with content
// strictly smaller (resp. larger) than content(X).
int eta(const Partition& lambda, int l, int i, Node x, Side side);

std::map<Node, int> hook_lengths(const Partition& lambda);

Partition add_node(const Partition& lambda, Node x);
Partition remove_node(const Partition& lambda, Node x);

// Partitions of n in graded-lex order.
std::vector<Partition> enumerate_partitions(int n);
// All partitions of size <= n in graded-lex order.
std::vector<Partition> enumerate_up_to(int n);
// All lambda with residue_counts(lambda, v.size()) == v.
std::vector<Partition> enumerate_with_residues(const std::vector<int>& v);

void require_level(int l);
void require_residue(int i, int l);

}  // namespace affine_fock
