#include <iostream>

#include "qsusy/cli.hpp"

int main(int argc, char** argv) { return qsusy::cli::run(argc, argv, std::cout, std::cerr); }
