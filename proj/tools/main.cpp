#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env;
  if (const char* v = std::getenv("JACOBI_DEFORM_MAX_BASIS")) env = v;
  return jdeform::cli::run(args, std::cout, std::cerr, env);
}
