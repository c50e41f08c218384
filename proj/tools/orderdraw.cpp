#include "orderdraw/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
    return orderdraw::run_cli(argc, argv, std::cout, std::cerr);
}
