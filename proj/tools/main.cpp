#include <iostream>
#include <string>
#include <vector>

#include "grassmann/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return grassmann::cli::run(args, std::cout, std::cerr);
}
