#include "gdpf/cli.hpp"

#include <unistd.h>

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return gdpf::cli::run(args, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
