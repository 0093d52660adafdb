#include "trigroup/generators.hpp"

#include <queue>
#include <string>

#include "trigroup/error.hpp"

namespace trigroup {

Letter turn_from_position(const SplitTree& tree, int arrival, int out_dart) {
  const int next = tree.next_ccw(arrival);
  if (out_dart == next) return Letter::L;
  if (out_dart == tree.next_ccw(next) && out_dart != arrival) return Letter::R;
  if (out_dart == arrival) {
    throw Error(Errc::BacktrackNotAFork, "dart " + std::to_string(out_dart) + " leaves along the arrival edge");
  }
  throw Error(Errc::BacktrackNotAFork, "dart " + std::to_string(out_dart) + " is not at vertex " +
                                           std::to_string(tree.vertex(arrival)));
}

Letter turn_at(const SplitTree& tree, int in_dart, int out_dart) {
  return turn_from_position(tree, tree.mate(in_dart), out_dart);
}

Generator path_word(const SplitTree& tree, int first, int second, WorkCounters* counters) {
  const int n = tree.interior_count();
  if (first < n || second < n || first >= tree.vertex_count() || second >= tree.vertex_count() ||
      tree.twin_leaf(first) != second) {
    throw Error(Errc::NotTwins, "vertices " + std::to_string(first) + " and " + std::to_string(second) +
                                    " are not twin leaves");
  }
  // up[v]: dart at v toward `first`.
  std::vector<int> up(tree.vertex_count(), -1);
  std::queue<int> queue;
  queue.push(first);
  up[first] = tree.leaf_dart(first);
  std::uint64_t visits = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    ++visits;
    const int start = tree.first_dart(v);
    int d = start;
    do {
      const int e = tree.mate(d);
      const int u = tree.vertex(e);
      if (up[u] == -1) {
        up[u] = e;
        queue.push(u);
      }
      d = tree.next_ccw(d);
    } while (d != start);
  }

  // Interior vertices from `second` back toward `first`, with the dart each
  // is left by on the way to `second`.
  std::vector<std::pair<int, int>> hops;  // (arrival position, out dart)
  int out = tree.leaf_dart(second);
  int v = tree.neighbor(out);
  out = tree.mate(out);
  while (v != first) {
    hops.emplace_back(up[v], out);
    out = tree.mate(up[v]);
    v = tree.vertex(out);
  }

  std::uint64_t mults = 0;
  WordAccumulator acc(&mults);
  for (auto it = hops.rbegin(); it != hops.rend(); ++it) acc.push(turn_from_position(tree, it->first, it->second));

  if (counters) {
    counters->visits += visits;
    counters->multiplications += mults;
    counters->letters += acc.word().size();
  }
  return {first, second, acc.take_word(), acc.take_matrix()};
}

GeneratorSet all_generators_naive(const SplitTree& tree, WorkCounters* counters) {
  GeneratorSet set;
  set.generators.reserve(tree.pairs().size());
  for (const TwinPair& p : tree.pairs()) set.generators.push_back(path_word(tree, p.first, p.second, counters));
  return set;
}

}  // namespace trigroup
