#include <iostream>

#include "hurwitz/cli.hpp"
#include "hurwitz/kernels.hpp"

int main(int argc, char** argv) {
  hurwitz::kernels::configure_threads_from_env();
  return hurwitz::run_cli(argc, argv, std::cout, std::cerr);
}
