// commands.hpp - the CLI's commands as library functions so tests can drive
// them without spawning processes. Each returns the payload that goes to
// stdout plus the process exit code: 0 when the command's verdict passes,
// 1 when it fails. Usage and IO problems throw; the binary maps those to
// exit code 2.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "restoration/io.hpp"

namespace restoration {

struct CommandResult {
  int exit_code = 0;
  std::string output;  // JSON text
};

struct DecomposeArgs {
  std::string graph_path;
  std::string faults_path;
  Vertex s = 0;
  Vertex t = 0;
  int k = 1;
  std::string algo = "poly";  // greedy | poly | baseline
  std::optional<bool> weighted;  // default: the graph header decides
  bool linear_scan = false;
};

// Decomposes the canonical replacement path and self-verifies; exit 0 iff
// the verifier passes.
CommandResult cmd_decompose(const DecomposeArgs& args);

struct VerifyArgs {
  std::string graph_path;
  std::string faults_path;
  std::string decomposition_path;
  std::optional<int> budget;  // default: the value stored in the JSON
};

CommandResult cmd_verify(const VerifyArgs& args);

struct LowerboundArgs {
  int g = 4;
  int copies = 1;
  std::optional<int> r;  // default: per-copy fault count minus 2
};

// Rebuilds the hard family and runs the restorability decision at
// q = 2*copies. Without an r override the expected verdict is "not
// restorable" and the exit code reports whether that reproduced.
CommandResult cmd_lowerbound(const LowerboundArgs& args);

struct GenArgs {
  int g = 4;
  int copies = 1;
  bool odd = false;
  std::vector<int> gs;  // mixed copy sizes; overrides g/copies when set
  std::string out_prefix;  // empty: print the instance JSON only
};

CommandResult cmd_gen(const GenArgs& args);

struct ExperimentArgs {
  std::string config_path;  // empty: built-in default config
  std::string out_prefix;   // when set, writes <prefix>.json and <prefix>.csv
  bool timing = false;      // wall-clock fields are opt-in; they break byte
                            // reproducibility, everything else is seeded
};

// Runs seeded trials of instance generation -> decomposition -> verification
// and aggregates per-(algo, k) maxima. Exit 0 iff every record passed.
CommandResult cmd_experiment(const ExperimentArgs& args);

}  // namespace restoration
