#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "layered_cheb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const char* env = std::getenv(layered_cheb::cli::kMaxLengthEnv);
    return layered_cheb::cli::run(args, std::cout, std::cerr, env ? env : "");
}
