#include <iostream>
#include <string>
#include <vector>

#include "pbrat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pbrat::cli::dispatch(args, std::cout, std::cerr);
}
