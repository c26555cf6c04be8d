#include "vdemask/cli.hpp"

int main(int argc, char** argv) {
    return vdemask::cli_main(argc, argv);
}
