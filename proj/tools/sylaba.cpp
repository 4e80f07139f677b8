#include <iostream>
#include <string>
#include <vector>

#include "sylaba/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sylaba::cli::run(args, std::cout, std::cerr);
}
