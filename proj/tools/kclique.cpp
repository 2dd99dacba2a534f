#include <iostream>

#include "kclique/cli.hpp"

int main(int argc, char** argv) {
  return kclique::run_cli(argc, argv, std::cout, std::cerr);
}
