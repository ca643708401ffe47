#include <iostream>
#include <string>
#include <vector>

#include "dmt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dmt::cli::run(args, std::cout, std::cerr);
}
