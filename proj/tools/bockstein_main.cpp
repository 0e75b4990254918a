#include <iostream>
#include <string>
#include <vector>

#include "bockstein/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args.front() == "--help" || args.front() == "-h") {
    std::cout << bockstein::cli::usage();
    return args.empty() ? 2 : 0;
  }
  bockstein::cli::OutputEnvelope out = bockstein::cli::run(args);
  (out.exit_code == 2 ? std::cerr : std::cout) << out.body;
  return out.exit_code;
}
