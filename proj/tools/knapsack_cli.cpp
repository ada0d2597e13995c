#include <exception>
#include <iostream>

#include "knapsack/cli.hpp"

int main(int argc, char** argv) {
  try {
    return knapsack::run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return 1;
  }
}
