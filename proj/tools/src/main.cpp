#include <iostream>

#include "extrobin/cli/commands.hpp"

int main(int argc, char** argv) {
    return extrobin::cli::run(argc, argv, std::cout, std::cerr);
}
