#pragma once

#include <cstdint>
#include <vector>

#include "trigroup/sl2z.hpp"
#include "trigroup/split_tree.hpp"

namespace trigroup {

// Unit-cost work accounting shared by both generator algorithms.
struct WorkCounters {
  std::uint64_t multiplications = 0;  // matrix products, letter products included
  std::uint64_t letters = 0;          // letters written into output words
  std::uint64_t visits = 0;           // vertices touched by traversals
  int depth = 0;                      // deepest recursion level reached
};

struct Generator {
  int first = 0;   // C1
  int second = 0;  // C2
  TurnWord word;
  Mat2Z matrix;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// One generator per twin pair, in pair order.
struct GeneratorSet {
  std::vector<Generator> generators;

  std::size_t size() const noexcept { return generators.size(); }
  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

// Letter for passing through an interior vertex: arrive along in_dart (a dart
// pointing into v) and leave along out_dart (a dart at v). L when out_dart is
// the successor of the arrival position in the rotation, R when it is the
// one after that. Throws Error(BacktrackNotAFork) when out_dart leaves along
// the arrival edge.
Letter turn_at(const SplitTree& tree, int in_dart, int out_dart);

// Same rule from the arrival position (the dart at v on the arrival edge).
Letter turn_from_position(const SplitTree& tree, int arrival, int out_dart);

// Path word from `first` to its twin `second`. Roots the whole tree at
// `first` (one linear pass) and walks back from `second`. Throws
// Error(NotTwins).
Generator path_word(const SplitTree& tree, int first, int second, WorkCounters* counters = nullptr);

// Quadratic reference: path_word for every twin pair.
GeneratorSet all_generators_naive(const SplitTree& tree, WorkCounters* counters = nullptr);

}  // namespace trigroup
