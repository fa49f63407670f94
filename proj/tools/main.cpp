#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  auto res = schurres::cli::run(args, schurres::cli::env_default_format());
  std::cout << res.out;
  if (!res.err.empty()) std::cerr << "schur-resolve: " << res.err << "\n";
  return res.code;
}
