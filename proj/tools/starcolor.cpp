#include <iostream>
#include <string>
#include <vector>

#include "starcolor/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return starcolor::run_cli(args, std::cin, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "starcolor: internal error: " << e.what() << '\n';
        return 4;
    }
}
