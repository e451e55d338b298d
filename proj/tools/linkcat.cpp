#include <iostream>

#include "linkcat/cli.hpp"

int main(int argc, char** argv) {
  return linkcat::cli::run(argc, argv, std::cout, std::cerr);
}
