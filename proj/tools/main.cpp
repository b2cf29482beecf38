#include <string>
#include <vector>

#include "kacspec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kacspec::cli::run(args);
}
