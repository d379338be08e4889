#include <iostream>

#include "nhq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nhq::run_cli(args, std::cout, std::cerr);
}
