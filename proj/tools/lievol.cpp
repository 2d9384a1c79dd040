#include <iostream>

#include "lievol/cli.hpp"

int main(int argc, char** argv) {
  return lievol::cli::main_entry(argc, argv, std::cout, std::cerr);
}
