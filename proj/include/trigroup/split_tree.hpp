#pragma once

#include <vector>

#include "trigroup/rotation_graph.hpp"
#include "trigroup/surface.hpp"

namespace trigroup {

// Breadth-first spanning tree of the dual 1-skeleton, rooted at vertex 0.
struct SpanningTree {
  int root = 0;
  // Dart at v on the edge to its parent; -1 at the root.
  std::vector<int> parent_dart;
  std::vector<char> is_tree_dart;
  // Edges as their lower dart, ascending.
  std::vector<int> tree_edges;
  // Co-tree edges in BFS discovery order, each as the dart through which it
  // was first scanned (the C1 side).
  std::vector<int> cotree_edges;

  int parent(const RotationGraph& g, int v) const {
    return parent_dart[v] < 0 ? -1 : g.vertex(g.twin(parent_dart[v]));
  }
};

SpanningTree spanning_tree(const DualComplex& dual);

struct TwinPair {
  int first = 0;   // C1: leaf on the discovering dart's side
  int second = 0;  // C2: leaf on the twin's side
  int dual_dart = 0;  // the discovering dart in the dual

  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

// The tree obtained by cutting every co-tree edge in two. Interior vertices
// 0..n-1 are the triangles and keep their darts 3v, 3v+1, 3v+2 and rotation;
// a cut dart now leads to a new leaf. Pair k owns leaves n+2k (C1) and
// n+2k+1 (C2); leaf v has the single dart 3n + (v - n).
class SplitTree {
 public:
  SplitTree() = default;

  int interior_count() const noexcept { return n_; }
  int vertex_count() const noexcept { return 2 * n_ + 2; }
  int leaf_count() const noexcept { return n_ + 2; }
  int dart_count() const noexcept { return static_cast<int>(mate_.size()); }

  bool is_leaf(int v) const noexcept { return v >= n_; }
  int vertex(int dart) const noexcept { return dart < 3 * n_ ? dart / 3 : n_ + (dart - 3 * n_); }
  int mate(int dart) const { return mate_[dart]; }
  int degree(int v) const noexcept { return is_leaf(v) ? 1 : 3; }
  int first_dart(int v) const noexcept { return is_leaf(v) ? 3 * n_ + (v - n_) : 3 * v; }
  // Rotation at interior vertices (identity at leaves).
  int next_ccw(int dart) const noexcept {
    return dart < 3 * n_ ? 3 * (dart / 3) + (dart % 3 + 1) % 3 : dart;
  }
  int neighbor(int dart) const { return vertex(mate_[dart]); }

  int leaf_dart(int leaf) const noexcept { return 3 * n_ + (leaf - n_); }
  // Interior dart that the leaf hangs off.
  int attachment(int leaf) const { return mate_[leaf_dart(leaf)]; }
  int twin_leaf(int leaf) const noexcept { return ((leaf - n_) ^ 1) + n_; }
  int pair_of(int leaf) const noexcept { return (leaf - n_) / 2; }
  bool is_first(int leaf) const noexcept { return ((leaf - n_) & 1) == 0; }

  const std::vector<TwinPair>& pairs() const noexcept { return pairs_; }

  // Glue every twin pair back into a single edge.
  RotationGraph erase_twins() const;

 private:
  friend SplitTree split(const DualComplex& dual, const SpanningTree& tree);

  int n_ = 0;
  std::vector<int> mate_;
  std::vector<TwinPair> pairs_;
};

SplitTree split(const DualComplex& dual, const SpanningTree& tree);

}  // namespace trigroup
