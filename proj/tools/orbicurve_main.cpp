#include <iostream>

#include "orbicurve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orbicurve::cli::run(args, std::cout, std::cerr);
}
