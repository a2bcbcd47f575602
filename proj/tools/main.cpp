#include <CLI11.hpp>
#include <iostream>

#include "rkhsinfo/cli.hpp"

int main(int argc, char** argv) {
    rkhsinfo::CliConfig cfg;
    const auto app = rkhsinfo::build_cli(cfg);
    try {
        app->parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Map every argument problem onto the invalid-input exit code; help
        // requests exit cleanly.
        const int code = app->exit(e);
        return code == 0 ? 0 : 1;
    }
    return rkhsinfo::run(cfg, std::cout, std::cerr);
}
