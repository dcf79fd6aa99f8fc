#include <iostream>
#include <string>
#include <vector>

#include "riocalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    args.insert(args.begin(), "riocalc");
    return riocalc::cmd_dispatch(args, std::cout, std::cerr);
}
