#include <iostream>

#include "weightvar/cli.hpp"

int main(int argc, char** argv) { return weightvar::cli_main(argc, argv, std::cout, std::cerr); }
