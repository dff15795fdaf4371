#include <iostream>

#include "jsclass/cli.hpp"

int main(int argc, char** argv) {
  return jsclass::cli::run(argc, argv, std::cout, std::cerr);
}
