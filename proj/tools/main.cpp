#include <vector>

#include "corona/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return corona::run_cli(args);
}
