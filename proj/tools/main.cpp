#include <iostream>
#include <vector>

#include "ivp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ivp::cli::run(args, std::cout, std::cerr);
}
