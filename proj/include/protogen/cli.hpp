#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace protogen::cli {

struct CliOptions {
  std::string spec_path;
  std::string out_dir;
  std::optional<std::string> package_name;
  std::optional<std::string> emit_dot_path;
  bool check_only = false;
  bool json_diagnostics = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitSpecError = 1;
inline constexpr int kExitUsage = 2;

/// Runs the generator. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace protogen::cli
