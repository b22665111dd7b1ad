#include <iostream>

#include "pca/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pca::cli::run(args, std::cout, std::cerr);
}
