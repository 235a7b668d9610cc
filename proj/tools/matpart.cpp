#include <iostream>
#include <string>
#include <vector>

#include "matpart/cli.hpp"
#include "matpart/limits.hpp"

int main(int argc, char** argv) {
  matpart::set_limits(matpart::limits_from_environment(matpart::limits()));
  const std::vector<std::string> args(argv + 1, argv + argc);
  return matpart::cli::run_cli(args, std::cout, std::cerr);
}
