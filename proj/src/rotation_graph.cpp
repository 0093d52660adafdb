#include "trigroup/rotation_graph.hpp"

#include <stdexcept>
#include <string>

namespace trigroup {

RotationGraph::RotationGraph(int vertex_count, std::vector<int> dart_vertex,
                             std::vector<int> twin, std::vector<int> next_ccw)
    : vertex_count_(vertex_count),
      vertex_(std::move(dart_vertex)),
      twin_(std::move(twin)),
      next_(std::move(next_ccw)) {
  const int darts = static_cast<int>(vertex_.size());
  if (vertex_count_ < 0 || static_cast<int>(twin_.size()) != darts ||
      static_cast<int>(next_.size()) != darts) {
    throw std::invalid_argument("rotation graph: inconsistent array sizes");
  }
  prev_.assign(darts, -1);
  first_.assign(vertex_count_, -1);
  degree_.assign(vertex_count_, 0);
  for (int d = 0; d < darts; ++d) {
    const int v = vertex_[d];
    if (v < 0 || v >= vertex_count_) throw std::invalid_argument("rotation graph: dart vertex out of range");
    const int t = twin_[d];
    if (t < 0 || t >= darts || t == d || twin_[t] != d) {
      throw std::invalid_argument("rotation graph: twin is not a fixed-point-free involution at dart " +
                                  std::to_string(d));
    }
    const int s = next_[d];
    if (s < 0 || s >= darts || vertex_[s] != v || prev_[s] != -1) {
      throw std::invalid_argument("rotation graph: next_ccw is not a permutation of each vertex's darts");
    }
    prev_[s] = d;
    if (first_[v] == -1) first_[v] = d;
    ++degree_[v];
  }
  // Each vertex's darts must form one cycle.
  for (int v = 0; v < vertex_count_; ++v) {
    if (first_[v] == -1) continue;
    int len = 0;
    int d = first_[v];
    do {
      d = next_[d];
      ++len;
    } while (d != first_[v] && len <= degree_[v]);
    if (len != degree_[v]) {
      throw std::invalid_argument("rotation graph: rotation at vertex " + std::to_string(v) +
                                  " is not a single cycle");
    }
  }
}

}  // namespace trigroup
