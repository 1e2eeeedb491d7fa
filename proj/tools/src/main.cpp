#include <iostream>

#include "parasl2_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return parasl2::cli::run(args, std::cout, std::cerr);
}
