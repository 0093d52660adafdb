#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trigroup/faces.hpp"
#include "trigroup/rotation_graph.hpp"

namespace trigroup {

// Side s of triangle t. Sides of a triangle are numbered counterclockwise.
struct Slot {
  int triangle = 0;
  int side = 0;

  int index() const noexcept { return 3 * triangle + side; }
  static Slot from_index(int i) noexcept { return {i / 3, i % 3}; }
  friend bool operator==(const Slot&, const Slot&) = default;
};

// Unvalidated gluing data, as read from a file or produced by a generator.
struct RawGluing {
  int triangles = 0;
  std::vector<std::pair<Slot, Slot>> pairs;
};

// n ideal triangles with their 3n sides glued in pairs. Only obtainable
// through validate(), so every instance is a connected orientable surface.
class GluedTriangulation {
 public:
  int triangle_count() const noexcept { return n_; }
  int slot_count() const noexcept { return 3 * n_; }
  // The slot glued to slot index i.
  int mate(int i) const { return mate_[i]; }
  const std::vector<int>& mates() const noexcept { return mate_; }

  // Gluing pairs in canonical order: one per pair, lower slot first,
  // ascending by lower slot.
  RawGluing to_raw() const;

  friend bool operator==(const GluedTriangulation&, const GluedTriangulation&) = default;

 private:
  friend GluedTriangulation validate(const RawGluing& raw);
  GluedTriangulation(int n, std::vector<int> mate) : n_(n), mate_(std::move(mate)) {}

  int n_ = 0;
  std::vector<int> mate_;
};

// Throws Error with SlotOutOfRange, SlotSelfPaired, SlotPairedTwice,
// SlotUnpaired, OddTriangleCount or Disconnected.
GluedTriangulation validate(const RawGluing& raw);

// Dual cell structure: one vertex per triangle, dart 3t+s for slot (t, s),
// rotation (0,1,2) at every vertex, and the traced faces (one per cusp).
struct DualComplex {
  int triangles = 0;
  RotationGraph graph;
  std::vector<FaceCycle> faces;
};

DualComplex build_dual(const GluedTriangulation& tri);

struct SurfaceInvariants {
  int triangles = 0;
  int cusps = 0;
  int euler = 0;
  int genus = 0;
  int rank = 0;

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

// Throws Error(NonIntegralGenus) when 2 - c - chi is odd.
SurfaceInvariants invariants_of(const DualComplex& dual);

}  // namespace trigroup
