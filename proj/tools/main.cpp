#include "cli.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <unistd.h>

int main(int argc, char** argv)
{
  auto const* color_env = std::getenv("RNL_COLOR");
  bool const color = isatty(STDOUT_FILENO) && !(color_env && std::strcmp(color_env, "0") == 0);
  return revcount::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, color);
}
