#include <iostream>
#include <string>
#include <vector>

#include "rotsym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rotsym::cli::run(args, std::cout, std::cerr);
}
