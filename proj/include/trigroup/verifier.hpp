#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trigroup/generators.hpp"
#include "trigroup/sl2z.hpp"
#include "trigroup/split_tree.hpp"
#include "trigroup/surface.hpp"

namespace trigroup {

using Rational = boost::multiprecision::cpp_rational;

// Point of the real projective line, the boundary of the upper half-plane.
class IdealPoint {
 public:
  static IdealPoint infinity() { return IdealPoint(); }
  static IdealPoint finite(Rational x) { return IdealPoint(std::move(x)); }
  IdealPoint(long long x) : value_(Rational(x)) {}  // NOLINT: integers read naturally as points

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  friend bool operator==(const IdealPoint&, const IdealPoint&) = default;

 private:
  IdealPoint() = default;
  explicit IdealPoint(Rational x) : value_(std::move(x)) {}
  std::optional<Rational> value_;
};

// z -> (a z + b) / (c z + d) on the boundary.
IdealPoint mobius(const Mat2Z& g, const IdealPoint& z);

// (A - C)(B - D) / ((B - C)(A - D)), factors through an infinite point
// cancelled. Throws Error(DegenerateConfiguration) unless all four differ.
Rational cross_ratio(const IdealPoint& a, const IdealPoint& b, const IdealPoint& c, const IdealPoint& d);

// Shear of the edge AB between triangles ABC and ABD: log(-[A,B,C,D]), which
// is 0 for the symmetric pair and log z for (inf, 0, -1, z). Throws
// Error(SameSide) when C and D are not separated by AB.
double shear(const IdealPoint& a, const IdealPoint& b, const IdealPoint& c, const IdealPoint& d);

// Triangles (inf, 0, -1) and (inf, 0, z) cut by the horocycle Im w = h about
// inf. Lengths are hyperbolic: a horizontal segment at height h has length
// (Euclidean width) / h.
struct HorocycleConfig {
  double z = 1.0;
  double height = 1.0;
  double arc_first = 0.0;   // inside (inf, 0, -1)
  double arc_second = 0.0;  // inside (inf, 0, z)
};

HorocycleConfig horocycle_config(double z, double height);

// arc_second / arc_first; checked to agree at two heights. Throws
// Error(NonPositive) for z <= 0.
double horocycle_ratio(double z);

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool ok() const;
  void add(std::string name, bool ok, std::string detail = {});
  std::vector<std::string> failures() const;
};

// Rank = n/2 + 1, determinant 1 throughout, and matrix == mat_of_word(word).
Report check_generator_set(const GeneratorSet& gens, const SurfaceInvariants& inv);

// Developing-map frames of every dart of the split tree, relative to the
// dart leaving the lowest-numbered leaf (frame = identity). Entering a vertex
// and turning multiplies by the turn letter on the right; stepping onto the
// reverse dart of an edge multiplies by edge_flip().
class TreeFrames {
 public:
  explicit TreeFrames(const SplitTree& tree);
  const Mat2Z& frame(int dart) const { return frames_[dart]; }

 private:
  std::vector<Mat2Z> frames_;
};

// Side pairing of twin pair k expressed through its path word W and the
// frame F of the C1 attachment dart: F * S * W^-1 * S^-1 * F^-1.
Mat2Z side_pairing(const SplitTree& tree, const TreeFrames& frames, const Generator& gen, int pair);

// Holonomy around one cusp: walk the face, composing side pairings on the
// right in crossing order (inverse when crossing from the C2 side).
Mat2Z cusp_holonomy(const DualComplex& dual, const SplitTree& tree, const GeneratorSet& gens, int face);
Mat2Z cusp_holonomy(const DualComplex& dual, const SplitTree& tree, const TreeFrames& frames,
                    const GeneratorSet& gens, int face);

// Runs both generator algorithms and reports the first divergence.
Report oracle_compare(const SplitTree& tree);
Report compare_generator_sets(const GeneratorSet& naive, const GeneratorSet& fast);

}  // namespace trigroup
