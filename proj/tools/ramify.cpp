#include <iostream>

#include "ramify/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ramify::run_cli(args, std::cout, std::cerr);
}
