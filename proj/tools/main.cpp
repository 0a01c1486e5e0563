#include <cstdlib>
#include <iostream>
#include <unistd.h>

#include "holweitz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return holweitz::cli::run(args, std::cout, std::cerr, color);
}
