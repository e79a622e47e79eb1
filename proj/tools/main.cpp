#include <iostream>

#include "qrsum/cli.hpp"

int main(int argc, char** argv) {
  return qrsum::cli::run(argc, argv, std::cout, std::cerr);
}
