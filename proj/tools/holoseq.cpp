#include "holonomic/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return holonomic::cli::main_entry(argc, argv, std::cout, std::cerr);
}
