#include "trigroup/cli.hpp"

#include <chrono>
#include <ostream>

#include "trigroup/error.hpp"
#include "trigroup/fast_paths.hpp"
#include "trigroup/json_io.hpp"
#include "trigroup/pipeline.hpp"
#include "trigroup/random_instance.hpp"
#include "trigroup/tri_format.hpp"

namespace trigroup {
namespace {

using nlohmann::json;

GluedTriangulation load(const RunConfig& config) {
  if (config.input.has_value() == config.gen_random.has_value()) {
    throw Error(Errc::ParseError, "give exactly one of --input and --gen-random");
  }
  if (config.input) return validate(read_tri_file(*config.input));
  return gen_random(*config.gen_random, config.seed);
}

void write_text(std::ostream& out, const Pipeline& p, const GeneratorSet& gens, const Report* report,
                const json* stats, const RunConfig& config) {
  const SurfaceInvariants& inv = p.invariants;
  out << "triangles " << inv.triangles << " cusps " << inv.cusps << " euler " << inv.euler << " genus "
      << inv.genus << " rank " << inv.rank << '\n';
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Generator& g = gens.generators[k];
    out << "gen " << k << " (" << g.first << ',' << g.second << ") " << (g.word.empty() ? "-" : g.word.str())
        << ' ' << g.matrix.to_string() << '\n';
  }
  if (config.dump_faces) {
    for (const FaceCycle& f : p.dual.faces) {
      out << "face";
      for (int d : f.darts) out << ' ' << d;
      out << '\n';
    }
  }
  if (config.dump_tree) {
    for (const TwinPair& t : p.tree.pairs()) {
      out << "twins " << t.first << ' ' << t.second << " dart " << t.dual_dart << '\n';
    }
  }
  if (report) {
    for (const CheckResult& c : report->checks) {
      out << "check " << c.name << ' ' << (c.ok ? "ok" : "FAIL") << (c.detail.empty() ? "" : " " + c.detail) << '\n';
    }
  }
  if (stats) {
    for (const auto& [key, value] : stats->items()) out << "stat " << key << ' ' << value.dump() << '\n';
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<Pipeline> pipeline;
  try {
    pipeline = prepare(load(config));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  const Pipeline& p = *pipeline;

  WorkCounters counters;
  const auto start = std::chrono::steady_clock::now();
  const GeneratorSet gens = config.algorithm == Algorithm::Fast ? all_generators_fast(p.tree, &counters)
                                                                : all_generators_naive(p.tree, &counters);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::optional<Report> report;
  if (config.verify) report = verify_all(p, gens, config.oracle_limit);

  std::optional<json> stats;
  if (config.stats) {
    stats = json{{"algorithm", config.algorithm == Algorithm::Fast ? "fast" : "naive"},
                 {"multiplications", counters.multiplications},
                 {"letters", counters.letters},
                 {"visits", counters.visits},
                 {"recursion_depth", counters.depth},
                 {"wall_seconds", seconds}};
  }

  if (config.format == OutputFormat::Text) {
    write_text(out, p, gens, report ? &*report : nullptr, stats ? &*stats : nullptr, config);
  } else {
    json doc;
    doc["invariants"] = invariants_to_json(p.invariants);
    doc["generators"] = generators_to_json(gens);
    if (report) doc["checks"] = report_to_json(*report);
    if (stats) doc["stats"] = *stats;
    if (config.dump_faces) doc["faces"] = faces_to_json(p.dual);
    if (config.dump_tree) doc["tree"] = split_tree_to_json(p.tree);
    out << doc.dump(2) << '\n';
  }

  if (report && !report->ok()) {
    for (const std::string& f : report->failures()) err << "verification failed: " << f << '\n';
    return 2;
  }
  return 0;
}

}  // namespace trigroup
