#include <iostream>

#include "timeline/cli.hpp"

int main(int argc, char** argv) {
  return timeline::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
