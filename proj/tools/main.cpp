#include <iostream>

#include "gsest/cli.hpp"

int main(int argc, char** argv) {
  return gsest::cli::run(argc, argv, std::cout, std::cerr);
}
