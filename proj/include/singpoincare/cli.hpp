#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace singpoincare {

struct CliRequest {
  std::string command;  // resolve | poincare | alexander | zeta | equivariant | ideal | oracle
  std::optional<int> truncate;
  std::optional<std::uint64_t> seed;
  std::string format = "text";  // text | json | dot
  bool compare = false;
};

struct CliOutcome {
  int exit_code = 0;  // 0 ok, 1 usage or parse, 2 math error, 3 oracle mismatch
  std::string out;
  std::string err;
};

constexpr int kDefaultTruncation = 20;

/// Runs one command on the text of a job file.
CliOutcome run_command(const CliRequest& request, const std::string& job_text);

}  // namespace singpoincare
