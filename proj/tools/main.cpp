#include <iostream>

#include "tancone/cli.hpp"

int main(int argc, char** argv) {
  return tancone::run_cli(argc, argv, std::cout, std::cerr);
}
