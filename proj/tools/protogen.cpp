#include <iostream>

#include "protogen/cli.hpp"

int main(int argc, char **argv) {
  return protogen::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
