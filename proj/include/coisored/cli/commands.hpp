#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coisored/cli/serialize.hpp"
#include "coisored/cli/session.hpp"

namespace coisored {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInput = 3;

const std::vector<std::string>& command_names();

struct CommandOptions {
  int degree_bound = 4;
  std::string order = "grevlex";
  std::uint64_t seed = 0;
  int verify_trials = 10;
  /// S-pair cap; the default comes from COISORED_BUDGET or the built-in value.
  std::optional<std::size_t> budget;
  /// reduce: "restrict" (restrict to H, then invariants) or "quotient" (invariants of k[M]/<mu*I_S>).
  std::string route = "restrict";
  int closure_cap = kDefaultClosureCap;
  bool timing = false;
  /// Entity selection; empty means the command's default (usually the last declared).
  std::string groupoid;
  std::string subgroupoid;
  std::string action;
  std::string with;
};

struct CommandResult {
  int exit_code = kExitPass;
  /// Human-readable report.
  std::string text;
  /// Structured report; schema in docs/report.md.
  Json report;
  /// Session text re-declaring the entities the command checked or produced.
  std::string session;
};

/// Runs one command on a parsed session. Module errors propagate.
CommandResult run_command(const std::string& command, const Session& session,
                          const CommandOptions& options);

/// Applies global options, parses the session file and runs the command. Errors
/// become reports with exit code 2 (budget) or 3 (input).
CommandResult run_session_command(const std::string& command, const std::string& session_path,
                                  const CommandOptions& options);

/// Writes via a temporary file in the same directory and a rename.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace coisored
