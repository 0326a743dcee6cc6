#include <iostream>
#include <string>
#include <vector>

#include <alpha_spectra/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return alpha_spectra::cli::run(args, std::cout, std::cerr);
}
