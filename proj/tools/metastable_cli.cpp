#include <iostream>

#include "metastable/cli.hpp"

int main(int argc, char** argv) {
  return metastable::cli::run(argc, argv, std::cout, std::cerr);
}
