#include "hyperseries/cli.hpp"

int main(int argc, char** argv) {
    return hyperseries::cli::run_cli(argc, argv);
}
