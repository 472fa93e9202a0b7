#include <iostream>

#include "accelkey/cli.h"

int main(int argc, char** argv) {
  return accelkey::RunCli(argc, argv, std::cout, std::cerr);
}
