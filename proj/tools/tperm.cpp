#include <iostream>

#include "tperm_check/cli.hpp"

int main(int argc, char** argv) {
  return tperm::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
