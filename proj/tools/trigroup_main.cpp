#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "trigroup/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Free generators in PSL(2,Z) from ideal triangulations of cusped surfaces"};
  app.require_subcommand(1);

  trigroup::RunConfig config;
  CLI::App* run = app.add_subcommand("run", "Compute generators for one triangulation");
  auto* input = run->add_option("--input", config.input, ".tri file to read");
  auto* gen = run->add_option("--gen-random", config.gen_random, "Generate a random connected gluing of N triangles");
  input->excludes(gen);
  run->add_option("--seed", config.seed, "Seed for --gen-random")->default_val(0);
  const std::map<std::string, trigroup::Algorithm> algorithms{{"fast", trigroup::Algorithm::Fast},
                                                              {"naive", trigroup::Algorithm::Naive}};
  run->add_option("--algorithm", config.algorithm, "fast or naive")
      ->transform(CLI::CheckedTransformer(algorithms, CLI::ignore_case))
      ->default_str("fast");
  const std::map<std::string, trigroup::OutputFormat> formats{{"json", trigroup::OutputFormat::Json},
                                                              {"text", trigroup::OutputFormat::Text}};
  run->add_option("--format", config.format, "json or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("json");
  run->add_flag("--verify", config.verify, "Run all checks; exit 2 on failure");
  run->add_flag("--stats", config.stats, "Report work counters and wall time");
  run->add_flag("--dump-faces", config.dump_faces, "Include traced face cycles");
  run->add_flag("--dump-tree", config.dump_tree, "Include the split tree");
  run->add_option("--oracle-limit", config.oracle_limit,
                  "Largest triangle count for which --verify also runs the naive oracle")
      ->default_val(4096);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return trigroup::run(config, std::cout, std::cerr);
}
