#include "trigroup/split_tree.hpp"

#include <algorithm>
#include <queue>

namespace trigroup {

SpanningTree spanning_tree(const DualComplex& dual) {
  const RotationGraph& g = dual.graph;
  SpanningTree t;
  t.parent_dart.assign(g.vertex_count(), -1);
  t.is_tree_dart.assign(g.dart_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<char> listed(g.dart_count(), 0);

  std::queue<int> queue;
  seen[t.root] = 1;
  queue.push(t.root);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    const int start = g.first_dart(v);
    int d = start;
    do {
      const int e = g.twin(d);
      const int u = g.vertex(e);
      if (!seen[u]) {
        seen[u] = 1;
        t.parent_dart[u] = e;
        t.is_tree_dart[d] = t.is_tree_dart[e] = 1;
        t.tree_edges.push_back(std::min(d, e));
        queue.push(u);
      } else if (!t.is_tree_dart[d] && !listed[d]) {
        listed[d] = listed[e] = 1;
        t.cotree_edges.push_back(d);
      }
      d = g.next_ccw(d);
    } while (d != start);
  }
  std::sort(t.tree_edges.begin(), t.tree_edges.end());
  return t;
}

SplitTree split(const DualComplex& dual, const SpanningTree& tree) {
  const RotationGraph& g = dual.graph;
  const int n = g.vertex_count();
  SplitTree b;
  b.n_ = n;
  const int leaves = static_cast<int>(tree.cotree_edges.size()) * 2;
  b.mate_.assign(3 * n + leaves, -1);
  for (int d = 0; d < 3 * n; ++d) {
    if (tree.is_tree_dart[d]) b.mate_[d] = g.twin(d);
  }
  for (int k = 0; k < static_cast<int>(tree.cotree_edges.size()); ++k) {
    const int d = tree.cotree_edges[k];
    const int e = g.twin(d);
    const int c1 = 3 * n + 2 * k;
    const int c2 = c1 + 1;
    b.mate_[d] = c1;
    b.mate_[c1] = d;
    b.mate_[e] = c2;
    b.mate_[c2] = e;
    b.pairs_.push_back({n + 2 * k, n + 2 * k + 1, d});
  }
  return b;
}

RotationGraph SplitTree::erase_twins() const {
  std::vector<int> owner(3 * n_), twin(3 * n_), next(3 * n_);
  for (int d = 0; d < 3 * n_; ++d) {
    owner[d] = d / 3;
    next[d] = next_ccw(d);
    const int m = mate_[d];
    twin[d] = m < 3 * n_ ? m : attachment(twin_leaf(vertex(m)));
  }
  return RotationGraph(n_, std::move(owner), std::move(twin), std::move(next));
}

}  // namespace trigroup
