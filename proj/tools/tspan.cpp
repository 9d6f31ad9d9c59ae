#include <iostream>

#include "tspan/cli.hpp"

int main(int argc, char** argv) {
  return tspan::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
