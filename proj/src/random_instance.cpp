#include "trigroup/random_instance.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "trigroup/error.hpp"

namespace trigroup {

GluedTriangulation gen_random(int n, std::uint64_t seed, int max_attempts) {
  if (n < 2 || n % 2 != 0) {
    throw Error(Errc::OddTriangleCount, "random instances need an even n >= 2, got " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::vector<int> slots(3 * n);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    RawGluing raw;
    raw.triangles = n;
    for (int i = 0; i < 3 * n; i += 2) {
      raw.pairs.emplace_back(Slot::from_index(slots[i]), Slot::from_index(slots[i + 1]));
    }
    try {
      return validate(raw);
    } catch (const Error& e) {
      if (e.code() != Errc::Disconnected) throw;
    }
  }
  throw Error(Errc::GenerationFailed, "no connected gluing of " + std::to_string(n) + " triangles after " +
                                          std::to_string(max_attempts) + " attempts");
}

}  // namespace trigroup
