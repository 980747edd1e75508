#include <iostream>

#include "qr/cli/commands.hpp"

int main(int argc, char** argv) { return qr::cli::run(argc, argv, std::cout, std::cerr); }
