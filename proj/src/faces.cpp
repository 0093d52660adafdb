#include "trigroup/faces.hpp"

namespace trigroup {

std::vector<FaceCycle> trace_faces(const RotationGraph& g) {
  std::vector<FaceCycle> faces;
  std::vector<char> seen(g.dart_count(), 0);
  for (int start = 0; start < g.dart_count(); ++start) {
    if (seen[start]) continue;
    FaceCycle face;
    int d = start;
    while (!seen[d]) {
      seen[d] = 1;
      face.darts.push_back(d);
      d = face_successor(g, d);
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

}  // namespace trigroup
