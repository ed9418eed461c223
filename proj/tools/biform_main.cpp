#include "biform/cli.hpp"

int main(int argc, char** argv) {
    return biform::cli::main_entry(argc, argv);
}
