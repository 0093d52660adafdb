#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "trigroup/generators.hpp"
#include "trigroup/split_tree.hpp"

namespace trigroup {

// Plain undirected tree in adjacency form, for the balanced-split routines.
class Tree {
 public:
  // Throws std::invalid_argument unless the edges form a tree on vertex_count vertices.
  Tree(int vertex_count, const std::vector<std::pair<int, int>>& edges);
  static Tree from_split_tree(const SplitTree& tree);

  int vertex_count() const noexcept { return static_cast<int>(offset_.size()) - 1; }
  int degree(int v) const { return offset_[v + 1] - offset_[v]; }
  const int* neighbors_begin(int v) const { return adj_.data() + offset_[v]; }
  const int* neighbors_end(int v) const { return adj_.data() + offset_[v + 1]; }

 private:
  std::vector<int> offset_;
  std::vector<int> adj_;
};

// Deleting the edge (root_side, child_side) leaves two rooted subtrees whose
// roots are the edge's endpoints.
struct SplitResult {
  int root_side = -1;   // endpoint on the side of the traversal root
  int child_side = -1;  // the other endpoint
  int root_side_size = 0;
  int child_side_size = 0;

  int worse() const noexcept { return std::max(root_side_size, child_side_size); }
};

// Edge minimizing the larger side, found from one subtree-size pass rooted
// at `root`. Ties go to the first edge in preorder. Requires >= 2 vertices.
SplitResult find_split_edge(const Tree& tree, int root = 0);

// The non-leaf vertex whose largest remaining component is smallest, with
// the three component sizes (a degree-2 vertex reports n_min = 0). Throws
// Error(NoInteriorVertex) on trees without one, std::invalid_argument on
// vertices of degree > 3, and std::logic_error if the bounds
// (V-1)/3 <= n_max <= 2V/3 + 1 fail.
struct LemmaDiagnostic {
  int vertex = -1;
  int n_max = 0;
  int n_med = 0;
  int n_min = 0;
};

LemmaDiagnostic lemma_vertex_diagnostic(const Tree& tree);

class LeafTable;

// A SplitTree with some edges deleted. Owns the per-vertex scratch used by
// traversals and leaf tables, so one instance serves a whole recursion.
class CutTree {
 public:
  explicit CutTree(const SplitTree& tree);

  const SplitTree& tree() const noexcept { return *tree_; }
  void cut(int dart);
  bool is_cut(int dart) const { return cut_[dart] != 0; }

  // Preorder of the piece containing `root`. Afterwards up_dart(v) (dart at v
  // toward its parent, -1 at root) and preorder_index(v) are valid for the
  // piece's vertices.
  const std::vector<int>& traverse(int root, WorkCounters* counters = nullptr);
  int up_dart(int v) const { return up_[v]; }
  int preorder_index(int v) const { return index_[v]; }

  // Subtree sizes for the last traversal, indexed like its preorder.
  std::vector<int> subtree_sizes() const;

  LeafTable leaf_table(int root, int cut_dart, WorkCounters* counters = nullptr);

 private:
  friend class LeafTable;
  const SplitTree* tree_;
  std::vector<char> cut_;
  std::vector<int> up_;
  std::vector<int> index_;
  std::vector<int> order_;
  std::vector<int> stack_;
};

// Turn words and matrices between every vertex of one piece and its root,
// where the root is an endpoint of a deleted edge. Both directions include
// the junction turn at the root onto (or off) the deleted edge. Valid until
// another table is built over the same vertices.
class LeafTable {
 public:
  int root() const noexcept { return root_; }
  // Dart at the root on the deleted edge.
  int cut_dart() const noexcept { return cut_dart_; }
  const std::vector<int>& vertices() const noexcept { return vertices_; }
  std::vector<int> leaves() const;
  bool contains(int v) const;

  // v -> root, then onto the deleted edge.
  const Mat2Z& up_matrix(int v) const { return up_[local(v)]; }
  TurnWord up_word(int v) const;
  // Off the deleted edge at the root, then root -> v.
  const Mat2Z& down_matrix(int v) const { return down_[local(v)]; }
  TurnWord down_word(int v) const;

  // Appends letters without building intermediate words.
  void append_up_word(int v, TurnWord& out) const;
  void append_down_word(int v, TurnWord& out) const;

 private:
  friend class CutTree;
  LeafTable() = default;
  int local(int v) const { return owner_->index_[v]; }

  const CutTree* owner_ = nullptr;
  int root_ = -1;
  int cut_dart_ = -1;
  std::vector<int> vertices_;
  std::vector<int> parent_;  // local index, -1 at root
  std::vector<Letter> up_letter_;
  std::vector<Letter> down_letter_;
  std::vector<Mat2Z> up_;
  std::vector<Mat2Z> down_;
};

// Divide and conquer over balanced edge splits: O(V log V) matrix products.
// Output is identical to all_generators_naive. counters->depth receives the
// recursion depth. Throws std::logic_error if a split ever exceeds 2V/3 + 2.
GeneratorSet all_generators_fast(const SplitTree& tree, WorkCounters* counters = nullptr);

}  // namespace trigroup
