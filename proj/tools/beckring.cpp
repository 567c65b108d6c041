#include <iostream>

#include "beckring/report.hpp"

int main(int argc, char **argv) {
  return beckring::run_cli(argc, argv, std::cout, std::cerr);
}
