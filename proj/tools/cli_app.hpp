#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace f2orbit::cli {

enum ExitCode : int { kOk = 0, kDiff = 1, kUsage = 2, kGuard = 3 };

struct JobConfig {
  std::string command;
  int n = 0;
  std::string action = "first";
  std::optional<std::string> height;
  std::optional<std::string> input;
  std::optional<std::string> out;
  std::string format = "table";
  int threads = 0;
};

/// Parses argv and runs the selected command. Normal output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed job.
int execute(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace f2orbit::cli
