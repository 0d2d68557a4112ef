#include "lie/cli.hpp"

#ifndef LIE_DEFAULT_DATA_DIR
#define LIE_DEFAULT_DATA_DIR ""
#endif

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lie::cli::run_command(std::move(args), std::cout, std::cerr, LIE_DEFAULT_DATA_DIR);
}
