#include <iostream>
#include <string>
#include <vector>

#include "aomsim/cli.hpp"

int main(int argc, char** argv) {
  return aomsim::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
