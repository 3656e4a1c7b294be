#include <iostream>

#include "ricci3_cli.hpp"

int main(int argc, char** argv) {
  return ricci3::cli::run(argc, argv, std::cout, std::cerr);
}
