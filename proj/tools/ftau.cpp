#include <iostream>

#include "ftau/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ftau::cli::run(args, std::cout, std::cerr);
}
