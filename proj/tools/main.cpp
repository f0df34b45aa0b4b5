#include <iostream>

#include "walshlab/cli.hpp"

int main(int argc, char** argv) {
    return walshlab::run_cli(argc, argv, std::cout, std::cerr);
}
