#include <iostream>

#include "multsub/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return multsub::cli::run(argc, argv, std::cout, std::cerr);
}
