#include <iostream>

#include "aq/cli.hpp"

int main(int argc, char** argv) {
  const auto r = aq::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
