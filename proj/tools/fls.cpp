#include <iostream>

#include "fls/cli.hpp"

int main(int argc, char** argv) {
    return fls::cli::run(argc, argv, std::cout, std::cerr);
}
