#include <iostream>

#include "gstp/cli.hpp"

int main(int argc, char** argv) {
  return gstp::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
