#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cliffq {

struct CommandOptions {
  std::optional<std::string> point;
  std::optional<std::string> type;
  std::uint64_t seed = 0;
  unsigned order = 20;
  std::optional<std::uint64_t> prime;
  bool symbolic = false;
  /// Adds a wall-clock field; reports are then no longer byte-stable.
  bool timing = false;
  unsigned workers = 1;
};

struct CommandResult {
  int exit_code = 0;
  std::string report;   // JSON, for stdout
  std::string summary;  // one line, for stderr
};

const std::vector<std::string>& command_names();

/// Runs one command on the text of an input document (if any). Never
/// throws; failures become an error report with exit code 1, 2 or 3.
CommandResult run(std::string_view command, const CommandOptions& options,
                  const std::optional<std::string>& input_text);

/// Worker count from CLIFFORD_THREADS: positive integer bound on the
/// hardware concurrency. Unset means hardware concurrency. Throws
/// InvalidDocument-category errors on garbage.
unsigned workers_from_env(const char* value);

}  // namespace cliffq
