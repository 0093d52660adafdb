#include "trigroup/surface.hpp"

#include <algorithm>
#include <string>

#include "trigroup/error.hpp"

namespace trigroup {
namespace {

std::string slot_str(Slot s) {
  return "(" + std::to_string(s.triangle) + "," + std::to_string(s.side) + ")";
}

}  // namespace

RawGluing GluedTriangulation::to_raw() const {
  RawGluing raw;
  raw.triangles = n_;
  for (int i = 0; i < slot_count(); ++i) {
    if (i < mate_[i]) raw.pairs.emplace_back(Slot::from_index(i), Slot::from_index(mate_[i]));
  }
  return raw;
}

GluedTriangulation validate(const RawGluing& raw) {
  const int n = raw.triangles;
  if (n <= 0) throw Error(Errc::OddTriangleCount, "triangle count must be a positive even number, got " + std::to_string(n));
  if (n % 2 != 0) throw Error(Errc::OddTriangleCount, "triangle count " + std::to_string(n) + " is odd");

  std::vector<int> mate(3 * n, -1);
  for (const auto& [a, b] : raw.pairs) {
    for (Slot s : {a, b}) {
      if (s.triangle < 0 || s.triangle >= n || s.side < 0 || s.side > 2) {
        throw Error(Errc::SlotOutOfRange, "slot " + slot_str(s) + " does not exist");
      }
    }
    if (a == b) throw Error(Errc::SlotSelfPaired, "slot " + slot_str(a) + " is glued to itself");
    for (Slot s : {a, b}) {
      if (mate[s.index()] != -1) throw Error(Errc::SlotPairedTwice, "slot " + slot_str(s) + " is glued more than once");
    }
    mate[a.index()] = b.index();
    mate[b.index()] = a.index();
  }
  for (int i = 0; i < 3 * n; ++i) {
    if (mate[i] == -1) throw Error(Errc::SlotUnpaired, "slot " + slot_str(Slot::from_index(i)) + " is not glued");
  }

  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    for (int s = 0; s < 3; ++s) {
      const int u = mate[3 * t + s] / 3;
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) {
    throw Error(Errc::Disconnected, "dual graph has a component of " + std::to_string(reached) + " of " +
                                        std::to_string(n) + " triangles");
  }
  return GluedTriangulation(n, std::move(mate));
}

DualComplex build_dual(const GluedTriangulation& tri) {
  const int n = tri.triangle_count();
  std::vector<int> vertex(3 * n);
  std::vector<int> next(3 * n);
  for (int d = 0; d < 3 * n; ++d) {
    vertex[d] = d / 3;
    next[d] = 3 * (d / 3) + (d % 3 + 1) % 3;
  }
  DualComplex dual;
  dual.triangles = n;
  dual.graph = RotationGraph(n, std::move(vertex), tri.mates(), std::move(next));
  dual.faces = trace_faces(dual.graph);
  return dual;
}

SurfaceInvariants invariants_of(const DualComplex& dual) {
  SurfaceInvariants inv;
  inv.triangles = dual.triangles;
  inv.cusps = static_cast<int>(dual.faces.size());
  // Triangles minus edges; the ideal vertices are punctures.
  inv.euler = dual.graph.vertex_count() - dual.graph.edge_count();
  const int twice_genus = 2 - inv.cusps - inv.euler;
  if (twice_genus % 2 != 0 || twice_genus < 0) {
    throw Error(Errc::NonIntegralGenus, "2 - c - chi = " + std::to_string(twice_genus) + " is not twice a genus");
  }
  inv.genus = twice_genus / 2;
  inv.rank = 1 - inv.euler;
  return inv;
}

}  // namespace trigroup
