#include <iostream>
#include <string>
#include <vector>

#include <coxlab/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto                     r = coxlab::run_command(args);
  auto& os = r.status == coxlab::Status::invalid_input ? std::cerr : std::cout;
  os << r.text << '\n';
  return r.exit_code();
}
