#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace trigroup {

enum class Algorithm { Fast, Naive };
enum class OutputFormat { Json, Text };

struct RunConfig {
  std::optional<std::string> input;  // .tri path
  std::optional<int> gen_random;     // triangle count for a random instance
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::Fast;
  bool verify = false;
  bool stats = false;
  bool dump_faces = false;
  bool dump_tree = false;
  OutputFormat format = OutputFormat::Json;
  int oracle_limit = 4096;
};

// Exit status: 0 success, 1 invalid input or configuration, 2 verification
// failure. Diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace trigroup
