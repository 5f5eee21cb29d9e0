#include "freecons/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    freecons::RunResult res = freecons::run_cli(args);
    if (res.exit_code == 2)
        std::cerr << res.output;
    else
        std::cout << res.output;
    return res.exit_code;
}
