#include "trigroup/json_io.hpp"

#include <stdexcept>

namespace trigroup {

using nlohmann::json;

json matrix_to_json(const Mat2Z& m) {
  return json::array({json::array({m.a().str(), m.b().str()}), json::array({m.c().str(), m.d().str()})});
}

Mat2Z matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
      j[1].size() != 2) {
    throw std::runtime_error("matrix must be [[a,b],[c,d]]");
  }
  auto entry = [](const json& e) { return BigInt(e.get<std::string>()); };
  return {entry(j[0][0]), entry(j[0][1]), entry(j[1][0]), entry(j[1][1])};
}

json invariants_to_json(const SurfaceInvariants& inv) {
  return {{"triangles", inv.triangles}, {"cusps", inv.cusps}, {"euler", inv.euler},
          {"genus", inv.genus},         {"rank", inv.rank}};
}

SurfaceInvariants invariants_from_json(const json& j) {
  return {j.at("triangles").get<int>(), j.at("cusps").get<int>(), j.at("euler").get<int>(),
          j.at("genus").get<int>(), j.at("rank").get<int>()};
}

json generators_to_json(const GeneratorSet& gens) {
  json out = json::array();
  for (const Generator& g : gens.generators) {
    out.push_back({{"pair", {g.first, g.second}}, {"word", g.word.str()}, {"matrix", matrix_to_json(g.matrix)}});
  }
  return out;
}

GeneratorSet generators_from_json(const json& j) {
  GeneratorSet gens;
  for (const json& g : j) {
    gens.generators.push_back({g.at("pair").at(0).get<int>(), g.at("pair").at(1).get<int>(),
                               TurnWord(g.at("word").get<std::string>()), matrix_from_json(g.at("matrix"))});
  }
  return gens;
}

json faces_to_json(const DualComplex& dual) {
  json out = json::array();
  for (const FaceCycle& f : dual.faces) out.push_back(f.darts);
  return out;
}

json split_tree_to_json(const SplitTree& tree) {
  json interior = json::array();
  for (int v = 0; v < tree.interior_count(); ++v) {
    json slots = json::array();
    for (int s = 0; s < 3; ++s) {
      const int d = 3 * v + s;
      slots.push_back({{"position", s}, {"dart", d}, {"neighbor", tree.neighbor(d)}});
    }
    interior.push_back({{"vertex", v}, {"slots", slots}});
  }
  json leaves = json::array();
  json twins = json::array();
  for (const TwinPair& p : tree.pairs()) {
    for (int leaf : {p.first, p.second}) {
      const int d = tree.attachment(leaf);
      leaves.push_back({{"leaf", leaf}, {"vertex", d / 3}, {"position", d % 3}});
    }
    twins.push_back({p.first, p.second});
  }
  return {{"interior", interior}, {"leaves", leaves}, {"twins", twins}};
}

json report_to_json(const Report& report) {
  json items = json::array();
  for (const CheckResult& c : report.checks) items.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"ok", report.ok()}, {"checks", items}};
}

}  // namespace trigroup
