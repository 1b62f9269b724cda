#pragma once

#include <string>
#include <vector>

namespace spincone {

struct CliResult {
  int exit_code = 0;
  std::string out;  // stdout payload
  std::string err;  // diagnostics
};

// Full command dispatch; argv excludes the program name.
CliResult dispatch(const std::vector<std::string>& argv);

}  // namespace spincone
