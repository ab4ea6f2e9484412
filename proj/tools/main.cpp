#include <iostream>
#include <string>
#include <vector>

#include "gradedgrowth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gradedgrowth::run(args, std::cout, std::cerr);
}
