#include <iostream>
#include <string>
#include <vector>

#include "lexconn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lexconn::cli::run(args, std::cout, std::cerr);
}
