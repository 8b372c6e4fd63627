#include <vector>

#include "cordial/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cordial::run_cli(args);
}
