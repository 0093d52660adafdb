#pragma once

#include <vector>

#include "trigroup/rotation_graph.hpp"

namespace trigroup {

// Boundary of one face as a cyclic dart sequence. Consecutive darts satisfy
// next = prev_ccw(twin(dart)).
struct FaceCycle {
  std::vector<int> darts;

  int size() const noexcept { return static_cast<int>(darts.size()); }
  friend bool operator==(const FaceCycle&, const FaceCycle&) = default;
};

// The face successor of a dart: cross the edge, then take the dart preceding
// the arrival position in the rotation.
inline int face_successor(const RotationGraph& g, int dart) { return g.prev_ccw(g.twin(dart)); }

// Linear-time face tracing. Faces are emitted in order of their lowest
// unvisited starting dart, each starting at that dart.
std::vector<FaceCycle> trace_faces(const RotationGraph& g);

}  // namespace trigroup
