#include <iostream>
#include <string>
#include <vector>

#include "corrterms/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return corrterms::cli::run(args, std::cout, std::cerr);
}
