#include <iostream>
#include <string>
#include <vector>

#include "cli_impl.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cosk::cli::run(args, std::cout, std::cerr);
}
