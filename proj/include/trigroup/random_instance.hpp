#pragma once

#include <cstdint>

#include "trigroup/surface.hpp"

namespace trigroup {

// Uniformly random gluing of n triangles, resampled until connected.
// Deterministic per (n, seed). Throws Error(OddTriangleCount) for odd or
// non-positive n and Error(GenerationFailed) after max_attempts rejections.
GluedTriangulation gen_random(int n, std::uint64_t seed, int max_attempts = 1000);

}  // namespace trigroup
