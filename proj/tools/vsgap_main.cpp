#include <iostream>

#include "vsgap/cli.hpp"

int main(int argc, char** argv) {
    return vsgap::cli_run(argc, argv, std::cout, std::cerr);
}
