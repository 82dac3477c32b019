#include <iostream>
#include <string>
#include <vector>

#include "gainlap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gainlap::cli::run(args, std::cout, std::cerr);
}
