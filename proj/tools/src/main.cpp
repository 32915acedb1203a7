#include <iostream>
#include <string>
#include <vector>

#include "fwlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fwlab::cli::run(args, std::cout, std::cerr);
}
