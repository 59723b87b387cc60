#include <iostream>
#include <string>
#include <vector>

#include "ifshull/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ifshull::cli::run(args, std::cout, std::cerr);
}
