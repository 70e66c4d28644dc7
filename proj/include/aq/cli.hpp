#pragma once

#include <string>
#include <vector>

namespace aq {

// Exit codes: 0 clean, 1 the report lists violations or differences,
// 2 bad usage or unreadable input, 3 the computation has no solution.
struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// args excludes the program name, e.g. {"quantize", "su2", "--order", "4"}.
RunResult run(const std::vector<std::string>& args);

}  // namespace aq
