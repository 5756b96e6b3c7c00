#include <iostream>
#include <string>
#include <vector>

#include "jumpdet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return jumpdet::cli::run(args, std::cout, std::cerr);
}
