#include <cstdlib>
#include <iostream>

#include "matchgadget/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> budget;
  if (const char* value = std::getenv("MATCHGADGET_BUDGET")) budget = value;
  return matchgadget::cli::run_command(args, std::cin, std::cout, std::cerr, budget);
}
