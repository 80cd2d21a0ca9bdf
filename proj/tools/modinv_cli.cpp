#include <iostream>

#include "modinv/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const modinv::CommandResult r = modinv::run_command(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
