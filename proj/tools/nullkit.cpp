#include <iostream>
#include <string>
#include <vector>

#include "nullkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nullkit::cli::run(args, std::cout, std::cerr);
}
