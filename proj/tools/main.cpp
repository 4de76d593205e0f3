#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "dickson/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dickson::run(std::move(args), std::cout, std::cerr);
}
