#include <iostream>
#include <string>
#include <vector>

#include "anticanon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return anticanon::run(args, std::cout);
}
