#include <iostream>

#include "hyperline/cli.hpp"

int main(int argc, char** argv) {
  return hyperline::cli::run_cli(argc, argv, std::cout, std::cerr);
}
