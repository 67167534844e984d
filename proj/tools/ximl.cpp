#include <iostream>

#include "ximl/cli.hpp"

int main(int argc, char** argv) {
  return ximl::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
