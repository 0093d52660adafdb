#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "test_support.hpp"
#include "trigroup/cli.hpp"
#include "trigroup/fast_paths.hpp"
#include "trigroup/json_io.hpp"

using namespace trigroup;
using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_config(const RunConfig& config) {
  std::ostringstream out, err;
  const int status = run(config, out, err);
  return {status, out.str(), err.str()};
}

RunConfig fixture_config(const char* name) {
  RunConfig c;
  c.input = testing::fixture(name);
  return c;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("sphere fixture end to end") {
  RunConfig c = fixture_config("sphere.tri");
  c.verify = true;
  c.dump_faces = true;
  c.dump_tree = true;
  const Outcome o = run_config(c);
  REQUIRE(o.status == 0);
  CHECK(o.err.empty());
  const json doc = json::parse(o.out);
  CHECK(doc["invariants"]["genus"] == 0);
  CHECK(doc["invariants"]["cusps"] == 3);
  CHECK(doc["invariants"]["rank"] == 2);
  CHECK(doc["generators"][0]["word"] == "RR");
  CHECK(doc["generators"][0]["matrix"] == json::parse(R"([["1","0"],["2","1"]])"));
  CHECK(doc["checks"]["ok"] == true);
  CHECK(doc["faces"].size() == 3);
  CHECK(doc["tree"]["twins"].size() == 2);
  CHECK_FALSE(doc.contains("stats"));
}

TEST_CASE("input errors exit with status 1") {
  const Outcome bad = run_config(fixture_config("malformed.tri"));
  CHECK(bad.status == 1);
  CHECK(bad.err.find("SlotUnpaired") != std::string::npos);
  CHECK(bad.out.empty());

  const Outcome missing = run_config(fixture_config("does-not-exist.tri"));
  CHECK(missing.status == 1);

  RunConfig both = fixture_config("sphere.tri");
  both.gen_random = 10;
  CHECK(run_config(both).status == 1);
  CHECK(run_config(RunConfig{}).status == 1);

  RunConfig odd;
  odd.gen_random = 7;
  const Outcome o = run_config(odd);
  CHECK(o.status == 1);
  CHECK(o.err.find("OddTriangleCount") != std::string::npos);
}

TEST_CASE("output is deterministic without stats") {
  RunConfig c;
  c.gen_random = 200;
  c.seed = 3;
  c.verify = true;
  const Outcome a = run_config(c);
  const Outcome b = run_config(c);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  c.algorithm = Algorithm::Naive;
  const Outcome naive = run_config(c);
  CHECK(naive.out == a.out);
  c.format = OutputFormat::Text;
  const Outcome text = run_config(c);
  CHECK(text.status == 0);
  CHECK(text.out.rfind("triangles 200 ", 0) == 0);
}

TEST_CASE("json round trip preserves the generator set") {
  RunConfig c;
  c.gen_random = 1000;
  c.seed = 7;
  c.stats = true;
  const Outcome o = run_config(c);
  REQUIRE(o.status == 0);
  const json doc = json::parse(o.out);
  const GeneratorSet gens = generators_from_json(doc["generators"]);
  CHECK(gens.size() == 501);
  const SurfaceInvariants inv = invariants_from_json(doc["invariants"]);
  CHECK(inv.triangles == 1000);
  CHECK(check_generator_set(gens, inv).ok());
  CHECK(gens == all_generators_fast(testing::random_pipeline(1000, 7).tree));
  CHECK(doc["stats"]["algorithm"] == "fast");
  CHECK(doc["stats"]["multiplications"].get<std::uint64_t>() > 0);
}

TEST_SUITE_END();
