#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    sturm::cli::Environment env;
    try {
        env.brute_cap = sturm::cli::parse_brute_cap(std::getenv("STURM_BRUTE_CAP"));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sturm::cli::kExitUsage;
    }
    return sturm::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, env);
}
