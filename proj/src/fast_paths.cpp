#include "trigroup/fast_paths.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "trigroup/error.hpp"

namespace trigroup {
namespace {

// Non-root preorder position minimizing max(size, V - size); ties to the
// earliest position.
int best_cut_position(const std::vector<int>& sizes) {
  const int total = sizes.front();
  int best = -1;
  int best_worse = total + 1;
  for (int i = 1; i < static_cast<int>(sizes.size()); ++i) {
    const int worse = std::max(sizes[i], total - sizes[i]);
    if (worse < best_worse) {
      best_worse = worse;
      best = i;
    }
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tree

Tree::Tree(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 1 || static_cast<int>(edges.size()) != vertex_count - 1) {
    throw std::invalid_argument("tree: need exactly V - 1 edges");
  }
  offset_.assign(vertex_count + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count || u == v) {
      throw std::invalid_argument("tree: bad edge");
    }
    ++offset_[u + 1];
    ++offset_[v + 1];
  }
  for (int v = 0; v < vertex_count; ++v) offset_[v + 1] += offset_[v];
  adj_.resize(offset_.back());
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  for (const auto& [u, v] : edges) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  // V - 1 edges and connected means acyclic.
  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const int* u = neighbors_begin(v); u != neighbors_end(v); ++u) {
      if (!seen[*u]) {
        seen[*u] = 1;
        ++reached;
        stack.push_back(*u);
      }
    }
  }
  if (reached != vertex_count) throw std::invalid_argument("tree: not connected");
}

Tree Tree::from_split_tree(const SplitTree& tree) {
  std::vector<std::pair<int, int>> edges;
  for (int d = 0; d < tree.dart_count(); ++d) {
    const int e = tree.mate(d);
    if (d < e) edges.emplace_back(tree.vertex(d), tree.vertex(e));
  }
  return Tree(tree.vertex_count(), edges);
}

namespace {

struct RootedOrder {
  std::vector<int> order;   // preorder
  std::vector<int> parent;  // by vertex
  std::vector<int> sizes;   // by preorder position
};

RootedOrder root_tree(const Tree& tree, int root) {
  const int n = tree.vertex_count();
  RootedOrder r;
  r.parent.assign(n, -1);
  r.order.reserve(n);
  std::vector<int> stack{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    r.order.push_back(v);
    for (const int* u = tree.neighbors_end(v); u != tree.neighbors_begin(v);) {
      --u;
      if (!seen[*u]) {
        seen[*u] = 1;
        r.parent[*u] = v;
        stack.push_back(*u);
      }
    }
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[r.order[i]] = i;
  r.sizes.assign(n, 1);
  for (int i = n - 1; i > 0; --i) r.sizes[pos[r.parent[r.order[i]]]] += r.sizes[i];
  return r;
}

}  // namespace

SplitResult find_split_edge(const Tree& tree, int root) {
  if (tree.vertex_count() < 2) throw std::invalid_argument("find_split_edge: need at least two vertices");
  const RootedOrder r = root_tree(tree, root);
  const int i = best_cut_position(r.sizes);
  const int child = r.order[i];
  return {r.parent[child], child, tree.vertex_count() - r.sizes[i], r.sizes[i]};
}

LemmaDiagnostic lemma_vertex_diagnostic(const Tree& tree) {
  const int n = tree.vertex_count();
  const RootedOrder r = root_tree(tree, 0);
  std::vector<int> size_of(n);
  for (int i = 0; i < n; ++i) size_of[r.order[i]] = r.sizes[i];

  LemmaDiagnostic best;
  for (int v = 0; v < n; ++v) {
    const int deg = tree.degree(v);
    if (deg < 2) continue;
    if (deg > 3) throw std::invalid_argument("lemma_vertex_diagnostic: vertex of degree " + std::to_string(deg));
    int parts[3] = {0, 0, 0};
    int k = 0;
    for (const int* u = tree.neighbors_begin(v); u != tree.neighbors_end(v); ++u) {
      parts[k++] = (r.parent[*u] == v) ? size_of[*u] : n - size_of[v];
    }
    std::sort(parts, parts + 3, std::greater<>());
    if (best.vertex == -1 || parts[0] < best.n_max) best = {v, parts[0], parts[1], parts[2]};
  }
  if (best.vertex == -1) throw Error(Errc::NoInteriorVertex, "tree has no vertex of degree >= 2");
  if (3 * best.n_max < n - 1 || 3 * best.n_max > 2 * n + 3) {
    throw std::logic_error("split-vertex bound violated at vertex " + std::to_string(best.vertex));
  }
  return best;
}

// ---------------------------------------------------------------------------
// CutTree and LeafTable

CutTree::CutTree(const SplitTree& tree)
    : tree_(&tree),
      cut_(tree.dart_count(), 0),
      up_(tree.vertex_count(), -1),
      index_(tree.vertex_count(), -1) {
  order_.reserve(tree.vertex_count());
  stack_.reserve(tree.vertex_count());
}

void CutTree::cut(int dart) {
  cut_[dart] = 1;
  cut_[tree_->mate(dart)] = 1;
}

const std::vector<int>& CutTree::traverse(int root, WorkCounters* counters) {
  const SplitTree& t = *tree_;
  order_.clear();
  stack_.clear();
  up_[root] = -1;
  stack_.push_back(root);
  while (!stack_.empty()) {
    const int v = stack_.back();
    stack_.pop_back();
    index_[v] = static_cast<int>(order_.size());
    order_.push_back(v);
    // Children pushed in reverse rotation order so preorder follows rotation.
    const int start = t.first_dart(v);
    int d = start;
    int kids[3];
    int k = 0;
    do {
      if (!cut_[d] && d != up_[v]) kids[k++] = d;
      d = t.next_ccw(d);
    } while (d != start);
    while (k > 0) {
      const int e = t.mate(kids[--k]);
      const int u = t.vertex(e);
      up_[u] = e;
      stack_.push_back(u);
    }
  }
  if (counters) counters->visits += order_.size();
  return order_;
}

std::vector<int> CutTree::subtree_sizes() const {
  std::vector<int> sizes(order_.size(), 1);
  for (int i = static_cast<int>(order_.size()) - 1; i > 0; --i) {
    const int v = order_[i];
    sizes[index_[tree_->neighbor(up_[v])]] += sizes[i];
  }
  return sizes;
}

LeafTable CutTree::leaf_table(int root, int cut_dart, WorkCounters* counters) {
  const SplitTree& t = *tree_;
  traverse(root, counters);
  LeafTable table;
  table.owner_ = this;
  table.root_ = root;
  table.cut_dart_ = cut_dart;
  table.vertices_ = order_;
  const int m = static_cast<int>(order_.size());
  table.parent_.assign(m, -1);
  table.up_letter_.assign(m, Letter::L);
  table.down_letter_.assign(m, Letter::L);
  table.up_.resize(m);
  table.down_.resize(m);

  std::uint64_t mults = 0;
  for (int i = 1; i < m; ++i) {
    const int v = order_[i];
    const int at_parent = t.mate(up_[v]);  // dart at the parent toward v
    const int p = t.vertex(at_parent);
    const int pi = index_[p];
    // Toward the parent's parent, or onto the deleted edge at the root.
    const int parent_exit = (p == root) ? cut_dart : up_[p];
    table.parent_[i] = pi;
    table.up_letter_[i] = turn_from_position(t, at_parent, parent_exit);
    table.down_letter_[i] = turn_from_position(t, parent_exit, at_parent);
    table.up_[i] = table.up_[pi];
    table.up_[i].mul_left(table.up_letter_[i]);
    table.down_[i] = table.down_[pi];
    table.down_[i].mul_right(table.down_letter_[i]);
    mults += 2;
  }
  if (counters) counters->multiplications += mults;
  return table;
}

std::vector<int> LeafTable::leaves() const {
  std::vector<int> out;
  for (int v : vertices_) {
    if (owner_->tree().is_leaf(v)) out.push_back(v);
  }
  return out;
}

bool LeafTable::contains(int v) const {
  const int i = owner_->index_[v];
  return i >= 0 && i < static_cast<int>(vertices_.size()) && vertices_[i] == v;
}

void LeafTable::append_up_word(int v, TurnWord& out) const {
  for (int i = local(v); i > 0; i = parent_[i]) out.push_back(up_letter_[i]);
}

void LeafTable::append_down_word(int v, TurnWord& out) const {
  // Collected leaf-first, emitted root-first.
  std::vector<Letter> reversed;
  for (int i = local(v); i > 0; i = parent_[i]) reversed.push_back(down_letter_[i]);
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) out.push_back(*it);
}

TurnWord LeafTable::up_word(int v) const {
  TurnWord w;
  append_up_word(v, w);
  return w;
}

TurnWord LeafTable::down_word(int v) const {
  TurnWord w;
  append_down_word(v, w);
  return w;
}

// ---------------------------------------------------------------------------
// Divide and conquer

namespace {

class FastSolver {
 public:
  FastSolver(const SplitTree& tree, WorkCounters* counters) : tree_(tree), cuts_(tree), counters_(counters) {
    out_.generators.resize(tree.pairs().size());
  }

  GeneratorSet run() {
    std::vector<int> all(tree_.pairs().size());
    for (int k = 0; k < static_cast<int>(all.size()); ++k) all[k] = k;
    solve(tree_.interior_count(), std::move(all), 1);
    return std::move(out_);
  }

 private:
  void solve(int root, std::vector<int> pairs, int depth) {
    if (pairs.empty()) return;
    if (counters_) counters_->depth = std::max(counters_->depth, depth);

    const std::vector<int>& order = cuts_.traverse(root, counters_);
    const int total = static_cast<int>(order.size());
    const std::vector<int> sizes = cuts_.subtree_sizes();
    const int pos = best_cut_position(sizes);
    const int child = order[pos];
    const int child_size = sizes[pos];
    const int child_dart = cuts_.up_dart(child);           // at child, toward the root side
    const int parent_dart = tree_.mate(child_dart);        // at the root-side endpoint
    const int parent = tree_.vertex(parent_dart);
    if (3 * std::max(child_size, total - child_size) > 2 * total + 6) {
      throw std::logic_error("balanced split bound exceeded on a piece of " + std::to_string(total) + " vertices");
    }

    const int lo = pos;
    const int hi = pos + child_size;
    auto in_child = [&](int v) {
      const int i = cuts_.preorder_index(v);
      return i >= lo && i < hi;
    };
    std::vector<int> parent_pairs, child_pairs, cross;
    for (int k : pairs) {
      const TwinPair& p = tree_.pairs()[k];
      const bool a = in_child(p.first);
      const bool b = in_child(p.second);
      if (a && b) child_pairs.push_back(k);
      else if (!a && !b) parent_pairs.push_back(k);
      else cross.push_back(k);
    }
    pairs.clear();
    pairs.shrink_to_fit();

    cuts_.cut(child_dart);
    if (!cross.empty()) {
      const LeafTable parent_side = cuts_.leaf_table(parent, parent_dart, counters_);
      const LeafTable child_side = cuts_.leaf_table(child, child_dart, counters_);
      for (int k : cross) {
        const TwinPair& p = tree_.pairs()[k];
        const bool first_in_child = child_side.contains(p.first);
        const LeafTable& from = first_in_child ? child_side : parent_side;
        const LeafTable& to = first_in_child ? parent_side : child_side;
        Generator& g = out_.generators[k];
        g.first = p.first;
        g.second = p.second;
        from.append_up_word(p.first, g.word);
        to.append_down_word(p.second, g.word);
        g.matrix = from.up_matrix(p.first) * to.down_matrix(p.second);
        if (counters_) {
          ++counters_->multiplications;
          counters_->letters += g.word.size();
        }
      }
    }
    solve(parent, std::move(parent_pairs), depth + 1);
    solve(child, std::move(child_pairs), depth + 1);
  }

  const SplitTree& tree_;
  CutTree cuts_;
  WorkCounters* counters_;
  GeneratorSet out_;
};

}  // namespace

GeneratorSet all_generators_fast(const SplitTree& tree, WorkCounters* counters) {
  return FastSolver(tree, counters).run();
}

}  // namespace trigroup
