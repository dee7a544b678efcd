#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ordfix/counterexamples.hpp"
#include "ordfix/error.hpp"
#include "ordfix/hammerstein.hpp"
#include "ordfix/io.hpp"

namespace ordfix::cli {

enum class Command { Verify, Poset, Solve };

struct RunConfig {
  Command command = Command::Verify;
  /// Builtin fixture name; empty when a config file was given.
  std::string fixture;
  std::optional<std::string> out_path;

  // verify
  std::size_t n_max = 64;
  CounterexampleParams params;

  // poset
  std::optional<io::PosetConfig> poset_config;
  /// Empty means every check that applies.
  std::string check;
  double grid_step = 0.25;

  // solve
  std::optional<HammersteinProblem> problem;
  io::Json problem_json;
  std::vector<std::vector<double>> seeds;
  SolveOptions solve;
};

/// Thrown by parse_config for --help; carries the rendered help text.
struct HelpRequested {
  std::string text;
};

struct RunResult {
  int exit_code = 0;
  io::Json report;
};

/// 0 never; 2 for kinds that describe invalid input, 1 for everything that
/// signals a falsified claim, a failed hypothesis or a numerical failure.
int exit_code_for(ErrorKind kind);

const std::vector<std::string>& solve_fixture_names();
/// The problem config of a builtin solve fixture. Throws UsageError.
io::Json solve_fixture_config(const std::string& name);

/// Parses arguments without the program name. Reads every referenced file.
/// `env_seed` is the ORDFIX_SEED value, if set. Throws UsageError naming the
/// offending token, BadConfig or IoError.
RunConfig parse_config(const std::vector<std::string>& args, const std::optional<std::string>& env_seed = {});

/// Runs the workflow; failures are folded into the exit code and report.
RunResult run(const RunConfig& config);

/// Writes the canonical report to `path`, or to `fallback` without a path.
/// Throws InvalidReport for non-finite numbers and IoError for unwritable
/// paths; nothing is written in either case.
void emit_report(const RunResult& result, const std::optional<std::string>& path, std::ostream& fallback);

/// Full command-line behavior: parse, run, emit. Returns the exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordfix::cli
