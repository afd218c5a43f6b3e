#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rdss/common.hpp"

namespace rdss {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int report_schema_version = 1;

enum class Status : int {
  ok = 0,
  verification_failed = 1,
  parse_error = 2,
  partial = 3,
  cap_exceeded = 4,
  usage = 5,
  internal = 6,
};

struct CommandOptions {
  unsigned q = 2;
  bool exact = true;
  std::string method;
  unsigned coop_t = 0;                  // 0: plain repair check only
  std::optional<std::size_t> distance;  // required minimum distance for verify
  std::uint64_t seed = 1;
  std::size_t repair_trials = 1000;
  bool timing = false;
  Limits limits;
};

struct CommandResult {
  Status status = Status::ok;
  nlohmann::json report;
  std::vector<std::pair<std::string, std::string>> artifacts;  // file name, contents
};

/// Runs one of bounds, capacity, construct, verify, minrank, dualize on the given
/// file contents. Never throws: every failure becomes a status with an "error"
/// field in the report. `code_text` is required by verify and dualize only.
CommandResult run_command(const std::string& command, const std::string& graph_text,
                          const std::optional<std::string>& code_text, const CommandOptions& options);

/// Applies a textual option ("q", "state_cap", "method", ...). Throws InvalidArgument.
void set_option(CommandOptions& options, const std::string& key, const std::string& value);

}  // namespace rdss
