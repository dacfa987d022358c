#include <iostream>

#include "comather/cli.hpp"
#include "comather/kl.hpp"

int main(int argc, char** argv) {
  int code = comather::run_cli(argc, argv, std::cout, std::cerr);
  comather::flush_kl_cache();
  return code;
}
