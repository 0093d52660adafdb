#pragma once

#include "trigroup/generators.hpp"
#include "trigroup/split_tree.hpp"
#include "trigroup/surface.hpp"
#include "trigroup/verifier.hpp"

namespace trigroup {

// Everything computed from a triangulation before generators are read off.
struct Pipeline {
  GluedTriangulation triangulation;
  DualComplex dual;
  SurfaceInvariants invariants;
  SpanningTree spanning;
  SplitTree tree;
};

Pipeline prepare(GluedTriangulation tri);

// Generator-set checks, parabolicity of every cusp, and the naive/fast oracle
// comparison when the instance has at most oracle_limit triangles.
Report verify_all(const Pipeline& p, const GeneratorSet& gens, int oracle_limit);

}  // namespace trigroup
