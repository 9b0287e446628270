#include <iostream>
#include <string>
#include <vector>

#include "planar_turan/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return planar_turan::run_cli(args, std::cin, std::cout, std::cerr);
}
