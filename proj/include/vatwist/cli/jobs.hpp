#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "vatwist/cli/json_io.hpp"

namespace vatwist::cli {

enum class Command {
  CocycleCheck,
  CocycleClassify,
  GroupValidate,
  ExtensionBuild,
  Irreps,
  TwistedIrreps,
  TorusReport,
};

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

struct JobOptions {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::size_t max_order = 5000;
  bool matrices = false;
};

struct JobResult {
  int exit_code = 0;
  json report;
};

constexpr std::string_view kVersion = "0.1.0";

/// Runs one job. Never throws: module errors give exit code 1 and
/// malformed input exit code 2, each with an "error" object.
JobResult run_job(Command command, const json& input, const JobOptions& options);

/// Canonical text form (two-space indent, trailing newline).
std::string render(const json& report);

}  // namespace vatwist::cli
