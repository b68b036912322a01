#include <iostream>

#include "parafock/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return parafock::cli::run(args, std::cout, std::cerr);
}
