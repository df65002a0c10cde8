#pragma once

// The verbs behind the CLI. A run never throws: failures become exit codes
// (0 all checks passed, 1 a check failed, 2 bad input) and a diagnostic.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "core/semigroup.hpp"

namespace excross {

enum class Format { Json, Csv, Text };
enum class Level { Quick, Exhaustive };

std::optional<Format> parse_format(std::string_view text);
std::optional<Level> parse_level(std::string_view text);

struct RunConfig {
  std::string command;
  std::string subcommand;
  std::optional<std::string> group;
  std::optional<std::string> action;
  std::optional<std::string> algebra;
  Format format = Format::Json;
  Level level = Level::Exhaustive;
  std::optional<std::size_t> max_word_len;
  std::uint64_t seed = 0;
  std::size_t max_group_order = default_max_group_order();
};

struct RunResult {
  int exit_code = 0;
  std::string output;
  std::string diagnostic;
};

/// Verbs: sg {enumerate, table, oracle-check}; action {validate, induce};
/// cp {group, semigroup}; check {iso, assoc, covariant, all}.
RunResult run_command(const RunConfig& config);

}  // namespace excross
