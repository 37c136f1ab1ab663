#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace irtrans::util {

struct ProcessOptions {
  std::filesystem::path working_directory;  // empty: inherit
  std::chrono::milliseconds timeout{std::chrono::seconds(30)};
  std::optional<std::size_t> memory_limit_bytes;
  std::string stdin_data;
};

struct ProcessResult {
  int exit_code = -1;  // 128 + signal number when killed by a signal
  bool timed_out = false;
  std::string out;
  std::string err;

  bool ok() const { return !timed_out && exit_code == 0; }
};

// Runs `command` through /bin/sh -c in its own process group. The whole group
// is killed when the timeout expires.
ProcessResult run_shell(const std::string& command, const ProcessOptions& options);

std::string shell_quote(const std::string& arg);

// Replaces every `{key}` in `tmpl` with the shell-quoted value.
std::string expand_template(const std::string& tmpl,
                            const std::map<std::string, std::string>& values,
                            bool quote = true);

// True when the first word of `command` resolves to an executable on PATH.
bool command_available(const std::string& command);

}  // namespace irtrans::util
