#include <borders/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    return borders::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
