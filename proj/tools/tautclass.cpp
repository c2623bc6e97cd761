#include <iostream>

#include "tautclass/cli.hpp"

int main(int argc, char** argv) {
  return tautclass::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
