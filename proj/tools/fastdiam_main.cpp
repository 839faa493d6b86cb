#include <iostream>
#include <string>
#include <vector>

#include "fastdiam/bench.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fastdiam::bench::run_command(args, std::cout, std::cerr);
}
