#include <iostream>

#include "ludics/cli.hpp"

int main(int argc, char** argv) {
  return ludics::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
