#include <iostream>

#include "crystaldeg/cli_io.hpp"

int main(int argc, char** argv) {
    return crystaldeg::cli_main(argc, argv, std::cout, std::cerr);
}
