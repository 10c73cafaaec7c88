#include <iostream>

#include "chordenum/cli.hpp"

int main(int argc, char** argv) {
  return chordenum::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
