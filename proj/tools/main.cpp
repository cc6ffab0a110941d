#include <iostream>

#include "nilspan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilspan::run_cli(args, std::cout, std::cerr);
}
