#include "trigroup/verifier.hpp"

#include <cmath>
#include <string>

#include "trigroup/error.hpp"
#include "trigroup/fast_paths.hpp"

namespace trigroup {

IdealPoint mobius(const Mat2Z& g, const IdealPoint& z) {
  const Rational a(g.a()), b(g.b()), c(g.c()), d(g.d());
  if (z.is_infinite()) {
    if (c == 0) return IdealPoint::infinity();
    return IdealPoint::finite(a / c);
  }
  const Rational den = c * z.value() + d;
  if (den == 0) return IdealPoint::infinity();
  return IdealPoint::finite((a * z.value() + b) / den);
}

Rational cross_ratio(const IdealPoint& a, const IdealPoint& b, const IdealPoint& c, const IdealPoint& d) {
  const IdealPoint* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (*pts[i] == *pts[j]) throw Error(Errc::DegenerateConfiguration, "cross ratio of coincident points");
    }
  }
  // The infinite point occupies the same slot in its numerator and
  // denominator factor, so those two factors cancel to 1.
  auto diff = [](const IdealPoint& x, const IdealPoint& y) -> Rational {
    if (x.is_infinite() || y.is_infinite()) return Rational(1);
    return x.value() - y.value();
  };
  return (diff(a, c) * diff(b, d)) / (diff(b, c) * diff(a, d));
}

double shear(const IdealPoint& a, const IdealPoint& b, const IdealPoint& c, const IdealPoint& d) {
  const Rational cr = cross_ratio(a, b, c, d);
  if (cr > 0) throw Error(Errc::SameSide, "C and D lie on the same side of AB");
  return std::log(static_cast<double>(-cr));
}

HorocycleConfig horocycle_config(double z, double height) {
  if (!(z > 0)) throw Error(Errc::NonPositive, "horocycle configuration needs z > 0");
  if (!(height > 0)) throw Error(Errc::NonPositive, "horocycle height must be positive");
  // The sides through inf are the vertical lines x = -1, x = 0, x = z.
  auto arc = [height](double x0, double x1) { return std::abs(x1 - x0) / height; };
  return {z, height, arc(-1.0, 0.0), arc(0.0, z)};
}

double horocycle_ratio(double z) {
  const HorocycleConfig low = horocycle_config(z, 1.0);
  const HorocycleConfig high = horocycle_config(z, 7.25);
  const double r0 = low.arc_second / low.arc_first;
  const double r1 = high.arc_second / high.arc_first;
  if (std::abs(r0 - r1) > 1e-12 * std::max(1.0, std::abs(r0))) {
    throw std::logic_error("horocycle ratio depends on the height");
  }
  return r0;
}

bool Report::ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.ok) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
  return out;
}

Report check_generator_set(const GeneratorSet& gens, const SurfaceInvariants& inv) {
  Report r;
  const int expected = inv.triangles / 2 + 1;
  r.add("rank", static_cast<int>(gens.size()) == expected && inv.rank == expected,
        std::to_string(gens.size()) + " generators, rank " + std::to_string(expected));
  int bad_det = -1;
  int bad_word = -1;
  for (int k = 0; k < static_cast<int>(gens.size()); ++k) {
    const Generator& g = gens.generators[k];
    if (bad_det < 0 && g.matrix.determinant() != 1) bad_det = k;
    if (bad_word < 0 && mat_of_word(g.word) != g.matrix) bad_word = k;
  }
  r.add("determinant", bad_det < 0, bad_det < 0 ? "" : "generator " + std::to_string(bad_det) + " has determinant " +
                                                           gens.generators[bad_det].matrix.determinant().str());
  r.add("word-matrix", bad_word < 0,
        bad_word < 0 ? "" : "generator " + std::to_string(bad_word) + " differs from its re-multiplied word");
  return r;
}

TreeFrames::TreeFrames(const SplitTree& tree) : frames_(tree.dart_count()) {
  const Mat2Z flip = edge_flip();
  const int root = tree.interior_count();
  std::vector<int> stack{tree.leaf_dart(root)};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    const int y = tree.mate(x);
    frames_[y] = frames_[x] * flip;
    const int v = tree.vertex(y);
    if (tree.is_leaf(v)) continue;
    for (int z = tree.next_ccw(y); z != y; z = tree.next_ccw(z)) {
      frames_[z] = frames_[x];
      frames_[z].mul_right(turn_from_position(tree, y, z));
      stack.push_back(z);
    }
  }
}

Mat2Z side_pairing(const SplitTree& tree, const TreeFrames& frames, const Generator& gen, int pair) {
  const Mat2Z& f = frames.frame(tree.pairs()[pair].dual_dart);
  const Mat2Z flip = edge_flip();
  return f * flip * gen.matrix.inverse() * flip.inverse() * f.inverse();
}

Mat2Z cusp_holonomy(const DualComplex& dual, const SplitTree& tree, const TreeFrames& frames,
                    const GeneratorSet& gens, int face) {
  Mat2Z h;
  for (int y : dual.faces.at(face).darts) {
    const int m = tree.mate(y);
    const int v = tree.vertex(m);
    if (!tree.is_leaf(v)) continue;
    const int k = tree.pair_of(v);
    const Mat2Z gamma = side_pairing(tree, frames, gens.generators[k], k);
    // Crossing out of the C1 attachment enters the image of the fundamental
    // domain under gamma; the reverse crossing uses its inverse.
    h = h * (tree.is_first(v) ? gamma : gamma.inverse());
  }
  return h;
}

Mat2Z cusp_holonomy(const DualComplex& dual, const SplitTree& tree, const GeneratorSet& gens, int face) {
  return cusp_holonomy(dual, tree, TreeFrames(tree), gens, face);
}

Report compare_generator_sets(const GeneratorSet& naive, const GeneratorSet& fast) {
  Report r;
  if (naive.size() != fast.size()) {
    r.add("oracle", false, "generator counts differ: " + std::to_string(naive.size()) + " vs " +
                               std::to_string(fast.size()));
    return r;
  }
  for (std::size_t k = 0; k < naive.size(); ++k) {
    const Generator& a = naive.generators[k];
    const Generator& b = fast.generators[k];
    if (a.first != b.first || a.second != b.second) {
      r.add("oracle", false, "pair " + std::to_string(k) + ": leaves differ");
      return r;
    }
    const std::string& wa = a.word.str();
    const std::string& wb = b.word.str();
    if (wa != wb) {
      std::size_t i = 0;
      while (i < wa.size() && i < wb.size() && wa[i] == wb[i]) ++i;
      r.add("oracle", false, "pair " + std::to_string(k) + ": words diverge at letter " + std::to_string(i));
      return r;
    }
    if (a.matrix != b.matrix) {
      r.add("oracle", false, "pair " + std::to_string(k) + ": matrices differ");
      return r;
    }
  }
  r.add("oracle", true, std::to_string(naive.size()) + " generators identical");
  return r;
}

Report oracle_compare(const SplitTree& tree) {
  return compare_generator_sets(all_generators_naive(tree), all_generators_fast(tree));
}

}  // namespace trigroup
