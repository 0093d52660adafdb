#include "trigroup/pipeline.hpp"

#include <string>

#include "trigroup/fast_paths.hpp"

namespace trigroup {

Pipeline prepare(GluedTriangulation tri) {
  DualComplex dual = build_dual(tri);
  SurfaceInvariants inv = invariants_of(dual);
  SpanningTree spanning = spanning_tree(dual);
  SplitTree tree = split(dual, spanning);
  return {std::move(tri), std::move(dual), inv, std::move(spanning), std::move(tree)};
}

Report verify_all(const Pipeline& p, const GeneratorSet& gens, int oracle_limit) {
  Report report = check_generator_set(gens, p.invariants);

  const TreeFrames frames(p.tree);
  int bad = -1;
  for (int f = 0; f < static_cast<int>(p.dual.faces.size()) && bad < 0; ++f) {
    const Mat2Z h = cusp_holonomy(p.dual, p.tree, frames, gens, f);
    if (abs(h.trace()) != 2 || psl_equal(h, Mat2Z::identity())) bad = f;
  }
  report.add("cusp-parabolic", bad < 0,
             bad < 0 ? std::to_string(p.dual.faces.size()) + " cusps" : "cusp " + std::to_string(bad) + " is not parabolic");

  if (p.invariants.triangles <= oracle_limit) {
    for (auto& c : compare_generator_sets(all_generators_naive(p.tree), all_generators_fast(p.tree)).checks) {
      report.checks.push_back(std::move(c));
    }
  } else {
    report.add("oracle", true, "skipped: more than " + std::to_string(oracle_limit) + " triangles");
  }
  return report;
}

}  // namespace trigroup
