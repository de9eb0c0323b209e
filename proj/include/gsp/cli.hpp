#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gsp/builtin_functions.hpp"
#include "gsp/graph.hpp"
#include "gsp/path.hpp"
#include "gsp/path_function.hpp"

namespace gsp::cli {

enum class Command { Solve, Oracle, Verify, Gen, Bench };
enum class Algorithm { Eda, Embfa, Sta };

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kVerificationFailed = 2;
inline constexpr int kNegativeCircle = 3;

struct RunConfig {
  Command command = Command::Solve;
  std::string graph_path;
  VertexId source = 0;
  Algorithm algorithm = Algorithm::Eda;
  FunctionKind function = FunctionKind::Classic;
  std::optional<double> p;
  SystemKind system = SystemKind::SimplePaths;
  std::optional<std::size_t> max_roads;
  bool against_oracle = false;
  std::vector<std::string> properties;
  double tolerance = 1e-9;

  // gen / bench
  std::size_t n = 6;
  std::size_t m = 10;
  double weight_low = 0.0;
  double weight_high = 10.0;
  GenerationMode mode = GenerationMode::Directed;
  std::uint64_t seed_first = 0;
  std::uint64_t seed_last = 0;
};

// Parses argv-style arguments (args[0] is the program name). Throws
// std::invalid_argument with a one-line message on usage errors.
RunConfig parse_args(const std::vector<std::string>& args);

// Executes a parsed configuration. Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run, mapping every failure to its exit status. --help prints
// usage and returns 0.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsp::cli
