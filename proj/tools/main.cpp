#include <exception>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
    try {
        return perfectrep::cli::run(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return 3;
    }
}
