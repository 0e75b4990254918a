#pragma once

#include <string>
#include <vector>

namespace bockstein::cli {

// Exit codes: 0 success, 1 failed verification/assertion, 2 usage error.
struct OutputEnvelope {
  int exit_code = 0;
  std::string body;
};

// Full command dispatch; argv excludes the program name.  Never throws:
// errors become exit code 2 with a one-line diagnostic.
OutputEnvelope run(const std::vector<std::string>& args);

std::string usage();

}  // namespace bockstein::cli
