#pragma once

#include <span>
#include <vector>

namespace trigroup {

// Embedded multigraph in half-edge form. Each dart emanates from one vertex,
// has a twin on the same edge, and a successor in the counterclockwise cyclic
// order around its vertex. Loops and parallel edges are allowed.
class RotationGraph {
 public:
  RotationGraph() = default;

  // Throws std::invalid_argument if twin is not a fixed-point-free involution
  // or next_ccw does not restrict to a single cycle at each vertex.
  RotationGraph(int vertex_count, std::vector<int> dart_vertex, std::vector<int> twin,
                std::vector<int> next_ccw);

  int vertex_count() const noexcept { return vertex_count_; }
  int dart_count() const noexcept { return static_cast<int>(vertex_.size()); }
  int edge_count() const noexcept { return dart_count() / 2; }

  int vertex(int dart) const { return vertex_[dart]; }
  int twin(int dart) const { return twin_[dart]; }
  int next_ccw(int dart) const { return next_[dart]; }
  int prev_ccw(int dart) const { return prev_[dart]; }

  // Lowest-numbered dart at the vertex; scanning from it with next_ccw visits
  // the vertex's darts in rotation order.
  int first_dart(int v) const { return first_[v]; }
  int degree(int v) const { return degree_[v]; }

  std::span<const int> twins() const noexcept { return twin_; }

  friend bool operator==(const RotationGraph&, const RotationGraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<int> vertex_;
  std::vector<int> twin_;
  std::vector<int> next_;
  std::vector<int> prev_;
  std::vector<int> first_;
  std::vector<int> degree_;
};

}  // namespace trigroup
