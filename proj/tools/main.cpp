#include <iostream>

#include "gsp/cli.hpp"

int main(int argc, char** argv) {
  return gsp::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
