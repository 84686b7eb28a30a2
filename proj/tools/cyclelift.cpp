#include <iostream>

#include "cyclelift/cli.hpp"

int main(int argc, char** argv) { return cyclelift::cli::run(argc, argv, std::cout, std::cerr); }
