#include <iostream>
#include <string>
#include <vector>

#include "weyldiag/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  const weyldiag::cli::Result result = weyldiag::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
