#pragma once

#include <optional>
#include <string>
#include <vector>

#include "olog/chain.hpp"
#include "olog/generator.hpp"

namespace olog {

// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitParse = 2, kExitParam = 3 };

struct RunReport {
  std::string command;
  std::vector<std::string> inputs;
  std::string verdict;  // PASS or FAIL
  std::vector<std::string> lines;
  long long elapsed_ms = 0;

  // Everything except timing; byte-identical for equal inputs.
  std::string comparable() const;
  // comparable(), a "---" separator and the elapsed time.
  std::string render() const;
};

struct CommandResult {
  int exit_code = kExitOk;
  RunReport report;
};

struct GlobalOptions {
  Comparators comparators;
  bool quiet = false;
};

CommandResult cmd_check(const std::string& schema_path, const std::optional<std::string>& instance_path,
                        const GlobalOptions& opts = {});

// Writes the canonical instance to out_path when given.
CommandResult cmd_simulate(const SimParams& params, const std::optional<std::string>& out_path,
                           const GlobalOptions& opts = {});

CommandResult cmd_iso(const std::string& schema_path, const std::string& a_path,
                      const std::string& b_path, const GlobalOptions& opts = {});

struct AnalogyOptions {
  int bricks_a = 9;
  int bricks_b = 9;
};

// Generates the protein and matched social instances, checks both against
// the bundled schema and searches for an isomorphism between them.
CommandResult cmd_analogy(const AnalogyOptions& analogy = {}, const GlobalOptions& opts = {});

CommandResult cmd_pullback(const std::string& schema_path, const std::string& instance_path,
                           const std::string& leg1, const std::string& leg2,
                           const GlobalOptions& opts = {});

// Maps an error code to the exit code it should produce.
int exit_code_for(const std::string& error_code);

}  // namespace olog
